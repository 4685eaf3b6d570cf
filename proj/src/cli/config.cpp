#include "biorder/cli.hpp"

#include <cmath>
#include <string>

namespace biorder::cli {

namespace {

void require_order(const char* field, double v)
{
    if (!(v > 0.0 && v < 1.0)) {
        throw ConfigError(std::string("--") + field + " must lie in (0, 1), got " +
                          format_number(v));
    }
}

void require_grid(const char* field, const GridSpec& g)
{
    if (!std::isfinite(g.start) || !std::isfinite(g.end) || !(g.start < g.end)) {
        throw ConfigError(std::string("--") + field + " needs start < end");
    }
    if (g.n < 1) {
        throw ConfigError(std::string("--") + field + " needs n >= 1");
    }
}

}  // namespace

void RunConfig::validate() const
{
    require_order("alpha", alpha);
    require_order("beta", beta);
    if (!(a_of_beta > 0.0) || !std::isfinite(a_of_beta)) {
        throw ConfigError("--a-of-beta must be positive");
    }
    if (trunc_max_terms < 1) {
        throw ConfigError("BIORDER_TRUNC_MAX_TERMS must be a positive integer");
    }
    if (command == Command::selftest) {
        return;
    }
    require_grid("grid", grid);
    if (t_grid) {
        require_grid("grid-t", *t_grid);
    }
    if (alpha_t.has_value() != beta_t.has_value()) {
        throw ConfigError("--alpha-t and --beta-t must be given together");
    }
    if (alpha_t) {
        require_order("alpha-t", *alpha_t);
        require_order("beta-t", *beta_t);
    }
    if (command == Command::transform && !(grid.start > 0.0)) {
        throw ConfigError("--grid: transform variables must be positive");
    }
    if (command == Command::kernel && grid.start < 0.0) {
        throw ConfigError("--grid: kernel arguments must be nonnegative");
    }
    if (command == Command::deriv || command == Command::partial) {
        if (input_path.empty() == builtin.empty()) {
            throw ConfigError("exactly one of --input and --builtin is required");
        }
        if (!builtin.empty()) {
            builtin_function(builtin);
        }
    }
}

GridSpec parse_grid_spec(const std::string& text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
        throw ConfigError("--grid: expected start:end:n, got '" + text + "'");
    }
    const auto start = parse_number(text.substr(0, c1));
    const auto end = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const auto n = parse_number(text.substr(c2 + 1));
    if (!start || !end || !n || *n != std::floor(*n) || *n > 1e8) {
        throw ConfigError("--grid: expected start:end:n, got '" + text + "'");
    }
    return {*start, *end, static_cast<int>(*n)};
}

std::function<double(double)> builtin_function(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::optional<double> p;
    if (colon != std::string::npos) {
        p = parse_number(spec.substr(colon + 1));
        if (!p) {
            throw ConfigError("--builtin: bad parameter in '" + spec + "'");
        }
    }
    if (name == "linear" && !p) {
        return [](double t) { return t; };
    }
    if (p && name == "const") {
        const double c = *p;
        return [c](double) { return c; };
    }
    if (p && name == "monomial") {
        if (*p < 0.0 || *p != std::floor(*p) || *p > 64.0) {
            throw ConfigError("--builtin: monomial degree must be an integer in [0, 64]");
        }
        const int k = static_cast<int>(*p);
        return [k](double t) { return std::pow(t, k); };
    }
    if (p && name == "exp") {
        const double c = *p;
        return [c](double t) { return std::exp(c * t); };
    }
    if (p && name == "sine") {
        const double w = *p;
        return [w](double t) { return std::sin(w * t); };
    }
    throw ConfigError("--builtin: unknown function '" + spec +
                      "' (const:c, linear, monomial:k, exp:c, sine:w)");
}

}  // namespace biorder::cli
