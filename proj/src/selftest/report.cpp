#include "biorder/selftest.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace biorder {

bool SelftestReport::all_pass() const
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string SelftestReport::to_text() const
{
    // One summary line per check id (worst case over the lattice), then the
    // failing entries individually.
    struct Summary {
        double worst = 0.0;
        double tol = 0.0;
        int fails = 0;
        int count = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Summary> by_id;
    for (const CheckResult& r : results) {
        auto [it, inserted] = by_id.try_emplace(r.id);
        if (inserted) {
            order.push_back(r.id);
        }
        Summary& s = it->second;
        s.worst = std::max(s.worst, r.worst_error);
        s.tol = r.tolerance;
        s.fails += r.pass ? 0 : 1;
        s.count += 1;
    }
    std::string out;
    char line[256];
    for (const std::string& id : order) {
        const Summary& s = by_id[id];
        std::snprintf(line, sizeof line, "%-24s %s  worst %.3e  tol %.1e  (%d/%d pass)\n",
                      id.c_str(), s.fails == 0 ? "PASS" : "FAIL", s.worst, s.tol,
                      s.count - s.fails, s.count);
        out += line;
    }
    for (const CheckResult& r : results) {
        if (!r.pass) {
            std::snprintf(line, sizeof line, "  fail %s alpha=%g beta=%g worst=%.3e %s\n",
                          r.id.c_str(), r.alpha, r.beta, r.worst_error, r.note.c_str());
            out += line;
        }
    }
    out += all_pass() ? "selftest: all pass\n" : "selftest: FAILURES\n";
    return out;
}

std::string SelftestReport::to_json() const
{
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
        nlohmann::ordered_json c;
        c["id"] = r.id;
        c["parameters"] = {{"alpha", r.alpha}, {"beta", r.beta}};
        c["worst_error"] = r.worst_error;
        c["tolerance"] = r.tolerance;
        c["pass"] = r.pass;
        if (!r.note.empty()) {
            c["note"] = r.note;
        }
        checks.push_back(std::move(c));
    }
    nlohmann::ordered_json doc;
    doc["checks"] = std::move(checks);
    doc["all_pass"] = all_pass();
    return doc.dump(2) + "\n";
}

}  // namespace biorder
