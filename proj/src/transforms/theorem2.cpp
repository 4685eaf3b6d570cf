#include "biorder/errors.hpp"
#include "biorder/transforms.hpp"

#include <string>

namespace biorder {

Theorem2Residual theorem2_transform_check(const BiOrder& order, const SampledFunction& f,
                                          double s, const OperatorOptions& opts)
{
    const Grid& grid = f.grid;
    if (grid.start() != 0.0) {
        throw GridError("theorem2_transform_check: the grid must start at t = 0");
    }
    const TransformQuery q = TransformQuery::laplace(s);
    const OperatorOutput ac = ac_derivative_grid(f, order, opts);
    const OperatorOutput ar = ar_derivative_grid(f, order, opts);

    const double f0 = f.values.front();
    std::vector<double> g(f.values.size(), 0.0);
    for (int n = 1; n <= grid.n_intervals(); ++n) {
        g[static_cast<std::size_t>(n)] = g_correction(order, f0, grid.node(n));
    }

    Theorem2Residual out;
    out.laplace_ac = laplace_numeric(SampledFunction(grid, ac.values), q).value;
    out.laplace_ar = laplace_numeric(SampledFunction(grid, ar.values), q, order.alpha()).value;
    out.laplace_g = laplace_numeric(SampledFunction(grid, g), q, order.alpha()).value;
    out.residual = out.laplace_ac - (out.laplace_ar - out.laplace_g);
    return out;
}

}  // namespace biorder
