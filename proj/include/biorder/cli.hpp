#pragma once

#include "biorder/errors.hpp"
#include "biorder/grid.hpp"
#include "biorder/operators.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace biorder::cli {

enum class Command { deriv, partial, transform, kernel, selftest };
enum class Side { left, right };
enum class TransformKind { laplace, sumudu };

struct GridSpec {
    double start = 0.0;
    double end = 1.0;
    int n = 64;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitNumerical = 4;

class ConfigError : public Error {
public:
    using Error::Error;
};

class InputError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Command command = Command::deriv;
    double alpha = 0.5;
    double beta = 0.5;
    double a_of_beta = 1.0;
    Variant variant = Variant::ac;
    Side side = Side::left;
    Scheme scheme = Scheme::corrected;
    GridSpec grid{};
    /// partial: the t grid of a builtin field (defaults to `grid`).
    std::optional<GridSpec> t_grid;
    /// partial: orders of the t direction; when set the mixed operator is
    /// applied instead of the derivative along x.
    std::optional<double> alpha_t;
    std::optional<double> beta_t;
    EvalOrder eval_order = EvalOrder::xt;
    TransformKind transform = TransformKind::laplace;
    std::string input_path;
    std::string builtin;
    std::string output_path;  ///< empty: CSV on stdout, no sidecar
    bool emit_plot = false;
    int trunc_max_terms = 200;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// "start:end:n"; ConfigError on malformed text.
GridSpec parse_grid_spec(const std::string& text);

/// const:c, linear, monomial:k, exp:c, sine:w.
std::function<double(double)> builtin_function(const std::string& spec);

/// Shortest representation that reads back to the same double.
std::string format_number(double v);

/// Strict decimal parse of a whole field; nullopt when malformed.
std::optional<double> parse_number(const std::string& text);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& table);

/// Parses CSV text with the given header. InputError names the bad row.
Table parse_csv(const std::string& text, const std::vector<std::string>& header);

/// `t,f` rows on a uniform grid.
SampledFunction read_sampled_function(const std::string& path);
std::string write_sampled_function(const SampledFunction& f);

/// `t,x,f` rows, t outer, x inner.
SampledField read_sampled_field(const std::string& path);
std::string write_sampled_field(const SampledField& f);

/// Runs one command, writing artifacts to disk (or stdout) and a one-line
/// diagnostic to `err` on failure. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace biorder::cli
