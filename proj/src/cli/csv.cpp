#include "biorder/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace biorder::cli {

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(line.substr(pos, comma - pos));
        if (comma == std::string::npos) {
            return out;
        }
        pos = comma + 1;
    }
}

// Rebuilds the uniform grid spanned by the abscissae, or throws naming the
// first node off the grid.
Grid uniform_grid(const std::vector<double>& t, const char* column)
{
    if (t.size() < 2) {
        throw InputError(std::string("input needs at least two distinct '") + column + "' values");
    }
    const int n = static_cast<int>(t.size()) - 1;
    if (!(t.front() < t.back())) {
        throw InputError(std::string("column '") + column + "' must be increasing");
    }
    const Grid g(t.front(), t.back(), n);
    for (int i = 0; i <= n; ++i) {
        if (std::fabs(t[static_cast<std::size_t>(i)] - g.node(i)) > 1e-9 * g.step()) {
            throw InputError("row " + std::to_string(i + 2) + ": column '" + column +
                             "' is not on a uniform grid");
        }
    }
    return g;
}

}  // namespace

std::string format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::optional<double> parse_number(const std::string& text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || first == last) {
        return std::nullopt;
    }
    return v;
}

std::string to_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out += (i ? "," : "") + table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(const std::string& text, const std::vector<std::string>& header)
{
    Table table;
    table.header = header;
    std::istringstream in(text);
    std::string line;
    int row = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line);
        if (!seen_header) {
            if (fields != header) {
                std::string want;
                for (std::size_t i = 0; i < header.size(); ++i) {
                    want += (i ? "," : "") + header[i];
                }
                throw InputError("row " + std::to_string(row) + ": expected header '" + want + "'");
            }
            seen_header = true;
            continue;
        }
        if (fields.size() != header.size()) {
            throw InputError("row " + std::to_string(row) + ": expected " +
                             std::to_string(header.size()) + " fields");
        }
        std::vector<double> values;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto v = parse_number(fields[i]);
            if (!v || !std::isfinite(*v)) {
                throw InputError("row " + std::to_string(row) + ": bad number in column '" +
                                 header[i] + "'");
            }
            values.push_back(*v);
        }
        table.rows.push_back(std::move(values));
    }
    if (!seen_header) {
        throw InputError("row 1: missing header");
    }
    return table;
}

SampledFunction read_sampled_function(const std::string& path)
{
    const Table table = parse_csv(slurp(path), {"t", "f"});
    std::vector<double> t;
    std::vector<double> f;
    for (const auto& r : table.rows) {
        t.push_back(r[0]);
        f.push_back(r[1]);
    }
    return SampledFunction(uniform_grid(t, "t"), std::move(f));
}

std::string write_sampled_function(const SampledFunction& f)
{
    Table table{{"t", "f"}, {}};
    for (int i = 0; i < f.grid.node_count(); ++i) {
        table.rows.push_back({f.grid.node(i), f.values[static_cast<std::size_t>(i)]});
    }
    return to_csv(table);
}

SampledField read_sampled_field(const std::string& path)
{
    const Table table = parse_csv(slurp(path), {"t", "x", "f"});
    if (table.rows.empty()) {
        throw InputError("input has no data rows");
    }
    // The x block length is the run of rows sharing the first t value.
    std::size_t nx = 0;
    while (nx < table.rows.size() && table.rows[nx][0] == table.rows[0][0]) {
        ++nx;
    }
    if (table.rows.size() % nx != 0) {
        throw InputError("row " + std::to_string(table.rows.size() + 1) +
                         ": rows do not form a full t x grid");
    }
    const std::size_t nt = table.rows.size() / nx;
    std::vector<double> xs;
    std::vector<double> ts;
    for (std::size_t i = 0; i < nx; ++i) {
        xs.push_back(table.rows[i][1]);
    }
    for (std::size_t j = 0; j < nt; ++j) {
        ts.push_back(table.rows[j * nx][0]);
    }
    const Grid gx = uniform_grid(xs, "x");
    const Grid gt = uniform_grid(ts, "t");
    std::vector<double> values;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& r = table.rows[k];
        if (r[0] != ts[k / nx] || r[1] != xs[k % nx]) {
            throw InputError("row " + std::to_string(k + 2) + ": (t, x) out of row-major order");
        }
        values.push_back(r[2]);
    }
    return SampledField(gx, gt, std::move(values));
}

std::string write_sampled_field(const SampledField& f)
{
    Table table{{"t", "x", "f"}, {}};
    for (int it = 0; it < f.t_grid.node_count(); ++it) {
        for (int ix = 0; ix < f.x_grid.node_count(); ++ix) {
            table.rows.push_back({f.t_grid.node(it), f.x_grid.node(ix), f.at(ix, it)});
        }
    }
    return to_csv(table);
}

}  // namespace biorder::cli
