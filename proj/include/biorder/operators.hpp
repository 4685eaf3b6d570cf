#pragma once

#include "biorder/grid.hpp"
#include "biorder/series.hpp"
#include "biorder/special_functions.hpp"

#include <string>
#include <vector>

namespace biorder {

/// Weight family of the product-integration scheme.
///
/// `corrected` integrates the kernel exactly over each cell (differences of
/// kernel_primitive) against forward-difference slopes. `paper_literal`
/// reproduces the printed weights, E_{beta,2-alpha} based with t_{i+1} in
/// both Mittag-Leffler arguments, and the halved slope (f^{i+1}-f^i)/(2 dt).
enum class Scheme { corrected, paper_literal };

enum class Variant { ac, ar };

/// Summation order of the mixed operator: over x first, or over t first.
enum class EvalOrder { xt, tx };

struct OperatorOptions {
    Scheme scheme = Scheme::corrected;
    SeriesTruncation trunc{};
};

struct OperatorOutput {
    std::vector<double> values;
    Scheme scheme = Scheme::corrected;
    Variant variant = Variant::ac;
    /// Bound on the contribution of kernel-primitive truncation and rounding.
    double truncation_estimate = 0.0;
    /// Right-sided operators only: bound on the part of the integral beyond
    /// the horizon, for |f| bounded by its sampled maximum.
    double tail_estimate = 0.0;
    std::vector<std::string> warnings;
};

/// Weight delta_{n,i} of cell [t_i, t_{i+1}] at node t_n, 0 <= i < n <= N.
/// Corrected: P(t_n - t_i) - P(t_n - t_{i+1}) > 0.
double delta_coefficient(const BiOrder& order, const Grid& grid, int n, int i,
                         Scheme scheme = Scheme::corrected, const SeriesTruncation& trunc = {});

/// Left-sided A.C derivative at every node: C sum_{i<n} slope_i delta_{n,i}.
OperatorOutput ac_derivative_grid(const SampledFunction& f, const BiOrder& order,
                                  const OperatorOptions& opts = {});

/// Left-sided A.R derivative at every node.
///
/// f is replaced by its cell averages, the convolution I(t_n) is integrated
/// exactly against them, and the outer derivative is taken by differencing.
/// The contribution of the first cell average is differentiated exactly
/// (it is f_0 C k(t - a), singular at t = a); the smooth remainder is
/// central-differenced, one-sided at the last node. Node 0 reports the mean
/// of the derivative over the first cell.
OperatorOutput ar_derivative_grid(const SampledFunction& f, const BiOrder& order,
                                  const OperatorOptions& opts = {});

/// f0 C k(t), the term separating A.R from A.C. With paper_literal the rate
/// inside the Mittag-Leffler function is dropped: f0 C t^-alpha E_beta(-t^sigma).
double g_correction(const BiOrder& order, double f0, double t, bool paper_literal = false);

/// Right-sided derivative over [x, H] with H the end of f's grid standing in
/// for the infinite upper limit. Values are returned for nodes 0..N-1.
OperatorOutput right_sided_derivative(const SampledFunction& f, const BiOrder& order,
                                      Variant variant, const OperatorOptions& opts = {});

/// Right-sided derivative at a single node; HorizonError unless node < N.
double right_sided_derivative_at(const SampledFunction& f, const BiOrder& order, Variant variant,
                                 int node, const OperatorOptions& opts = {});

/// A.C derivative along x of the row at t index `t_index`.
std::vector<double> ac_partial_x(const SampledField& f, const BiOrder& order, int t_index,
                                 const OperatorOptions& opts = {});

/// A.R derivative along x of the row at t index `t_index`.
std::vector<double> ar_partial_x(const SampledField& f, const BiOrder& order, int t_index,
                                 const OperatorOptions& opts = {});

/// Mixed A.C derivative: the discrete mixed difference of f integrated
/// against the x and t kernels. The result has f's layout.
SampledField ac_mixed_xt(const SampledField& f, const BiOrder& order_x, const BiOrder& order_t,
                         EvalOrder eval_order = EvalOrder::xt, const OperatorOptions& opts = {});

/// Mixed A.R derivative: the 1D A.R operator applied along x and then along
/// t to the four-corner cell averages of f.
SampledField ar_mixed_xt(const SampledField& f, const BiOrder& order_x, const BiOrder& order_t,
                         const OperatorOptions& opts = {});

}  // namespace biorder
