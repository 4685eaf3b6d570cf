#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace biorder {

/// One check evaluated at one lattice point.
struct CheckResult {
    std::string id;
    double alpha = 0.0;
    double beta = 0.0;
    double worst_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  ///< set when the check threw
};

struct CheckSpec {
    std::string id;
    std::string description;
    std::function<CheckResult(double alpha, double beta)> run;
};

/// Every registered invariant check, in report order.
const std::vector<CheckSpec>& check_registry();

/// The (alpha, beta) lattice {0.1, 0.25, 0.5, 0.75, 0.9}^2, alpha-major.
std::vector<std::pair<double, double>> selftest_lattice();

struct SelftestReport {
    std::vector<CheckResult> results;

    bool all_pass() const;
    std::string to_text() const;
    /// {"checks": [{"id", "parameters": {"alpha", "beta"}, "worst_error",
    ///   "tolerance", "pass"}...], "all_pass": bool}
    std::string to_json() const;
};

/// Runs the registry over the lattice. Failures become report entries.
SelftestReport selftest_suite();

}  // namespace biorder
