#include "weights.hpp"

#include "biorder/errors.hpp"
#include "biorder/operators.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace biorder {

double delta_coefficient(const BiOrder& order, const Grid& grid, int n, int i, Scheme scheme,
                         const SeriesTruncation& trunc)
{
    if (n < 1 || n > grid.n_intervals() || i < 0 || i >= n) {
        throw IndexError("delta_coefficient: need 0 <= i < n <= N, got n = " + std::to_string(n) +
                         ", i = " + std::to_string(i));
    }
    const double step = grid.step();
    if (scheme == Scheme::paper_literal) {
        return detail::literal_weight(order, step, n - i);
    }
    return kernel_primitive(order, (n - i) * step, trunc).value -
           kernel_primitive(order, (n - i - 1) * step, trunc).value;
}

OperatorOutput ac_derivative_grid(const SampledFunction& f, const BiOrder& order,
                                  const OperatorOptions& opts)
{
    const Grid& grid = f.grid;
    const auto weights =
        detail::make_weights(order, grid.step(), grid.n_intervals(), opts.scheme, opts.trunc);
    const auto slopes = detail::forward_slopes(f.values, grid.step(), weights.slope_scale);

    OperatorOutput out;
    out.values = detail::ac_left_from_slopes(slopes, order.prefactor(), weights);
    out.scheme = opts.scheme;
    out.variant = Variant::ac;
    out.warnings = weights.warnings;
    double slope_l1 = 0.0;
    for (double s : slopes) {
        slope_l1 += std::fabs(s);
    }
    out.truncation_estimate = order.prefactor() * slope_l1 * weights.max_error;
    return out;
}

OperatorOutput ar_derivative_grid(const SampledFunction& f, const BiOrder& order,
                                  const OperatorOptions& opts)
{
    const Grid& grid = f.grid;
    const detail::PrimitiveTable table(order, grid.step(), grid.n_intervals(), opts.trunc);
    const auto cells = detail::cell_means(f.values);

    OperatorOutput out;
    out.values = detail::ar_left_from_cells(cells, order, table);
    out.scheme = Scheme::corrected;
    out.variant = Variant::ar;
    if (opts.scheme == Scheme::paper_literal) {
        out.warnings.push_back("paper_literal applies to the A.C scheme only; A.R used exact weights");
    }
    double cell_l1 = 0.0;
    for (double c : cells) {
        cell_l1 += std::fabs(c);
    }
    out.truncation_estimate = order.prefactor() * cell_l1 * 2.0 * table.max_error() / grid.step();
    return out;
}

double g_correction(const BiOrder& order, double f0, double t, bool paper_literal)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("g_correction: t must be positive, got " + std::to_string(t));
    }
    if (f0 == 0.0) {
        return 0.0;
    }
    if (paper_literal) {
        return f0 * order.prefactor() * std::pow(t, -order.alpha()) *
               mittag_leffler(order.beta(), 1.0, -std::pow(t, order.sigma()));
    }
    return f0 * order.prefactor() * kernel_value(order, t);
}

}  // namespace biorder
