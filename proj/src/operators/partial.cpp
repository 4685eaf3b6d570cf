#include "weights.hpp"

#include "biorder/errors.hpp"
#include "biorder/operators.hpp"

#include <string>

namespace biorder {

std::vector<double> ac_partial_x(const SampledField& f, const BiOrder& order, int t_index,
                                 const OperatorOptions& opts)
{
    const SampledFunction row(f.x_grid, f.row(t_index));
    return ac_derivative_grid(row, order, opts).values;
}

std::vector<double> ar_partial_x(const SampledField& f, const BiOrder& order, int t_index,
                                 const OperatorOptions& opts)
{
    const SampledFunction row(f.x_grid, f.row(t_index));
    return ar_derivative_grid(row, order, opts).values;
}

SampledField ac_mixed_xt(const SampledField& f, const BiOrder& order_x, const BiOrder& order_t,
                         EvalOrder eval_order, const OperatorOptions& opts)
{
    const int nx = f.x_grid.n_intervals();
    const int nt = f.t_grid.n_intervals();
    const double dx = f.x_grid.step();
    const double dt = f.t_grid.step();
    const auto wx = detail::make_weights(order_x, dx, nx, opts.scheme, opts.trunc);
    const auto wt = detail::make_weights(order_t, dt, nt, opts.scheme, opts.trunc);
    const double scale = wx.slope_scale * wt.slope_scale / (dx * dt);

    // d[j * nx + i]: mixed difference on cell (i, j).
    std::vector<double> d(static_cast<std::size_t>(nx) * nt);
    for (int j = 0; j < nt; ++j) {
        for (int i = 0; i < nx; ++i) {
            d[static_cast<std::size_t>(j) * nx + i] =
                scale * (f.at(i + 1, j + 1) - f.at(i + 1, j) - f.at(i, j + 1) + f.at(i, j));
        }
    }
    auto wxk = [&](int k) { return wx.w[static_cast<std::size_t>(k)]; };
    auto wtk = [&](int k) { return wt.w[static_cast<std::size_t>(k)]; };

    SampledField out(f.x_grid, f.t_grid,
                     std::vector<double>(static_cast<std::size_t>(nx + 1) * (nt + 1), 0.0));
    const double cpref = order_x.prefactor() * order_t.prefactor();
    if (eval_order == EvalOrder::xt) {
        // a[j * (nx + 1) + n] = sum_i d(i, j) wx(n - i)
        std::vector<double> a(static_cast<std::size_t>(nt) * (nx + 1), 0.0);
        for (int j = 0; j < nt; ++j) {
            for (int n = 1; n <= nx; ++n) {
                double acc = 0.0;
                for (int i = 0; i < n; ++i) {
                    acc += d[static_cast<std::size_t>(j) * nx + i] * wxk(n - i);
                }
                a[static_cast<std::size_t>(j) * (nx + 1) + n] = acc;
            }
        }
        for (int m = 1; m <= nt; ++m) {
            for (int n = 1; n <= nx; ++n) {
                double acc = 0.0;
                for (int j = 0; j < m; ++j) {
                    acc += a[static_cast<std::size_t>(j) * (nx + 1) + n] * wtk(m - j);
                }
                out.at(n, m) = cpref * acc;
            }
        }
    } else {
        // b[m * nx + i] = sum_j d(i, j) wt(m - j)
        std::vector<double> b(static_cast<std::size_t>(nt + 1) * nx, 0.0);
        for (int m = 1; m <= nt; ++m) {
            for (int i = 0; i < nx; ++i) {
                double acc = 0.0;
                for (int j = 0; j < m; ++j) {
                    acc += d[static_cast<std::size_t>(j) * nx + i] * wtk(m - j);
                }
                b[static_cast<std::size_t>(m) * nx + i] = acc;
            }
        }
        for (int m = 1; m <= nt; ++m) {
            for (int n = 1; n <= nx; ++n) {
                double acc = 0.0;
                for (int i = 0; i < n; ++i) {
                    acc += b[static_cast<std::size_t>(m) * nx + i] * wxk(n - i);
                }
                out.at(n, m) = cpref * acc;
            }
        }
    }
    return out;
}

SampledField ar_mixed_xt(const SampledField& f, const BiOrder& order_x, const BiOrder& order_t,
                         const OperatorOptions& opts)
{
    const int nx = f.x_grid.n_intervals();
    const int nt = f.t_grid.n_intervals();
    const detail::PrimitiveTable px(order_x, f.x_grid.step(), nx, opts.trunc);
    const detail::PrimitiveTable pt(order_t, f.t_grid.step(), nt, opts.trunc);

    // r[j][n]: x-derivative at x node n of the t-cell j strip.
    std::vector<std::vector<double>> r(static_cast<std::size_t>(nt));
    std::vector<double> cells(static_cast<std::size_t>(nx));
    for (int j = 0; j < nt; ++j) {
        for (int i = 0; i < nx; ++i) {
            cells[static_cast<std::size_t>(i)] =
                0.25 * (f.at(i, j) + f.at(i + 1, j) + f.at(i, j + 1) + f.at(i + 1, j + 1));
        }
        r[static_cast<std::size_t>(j)] = detail::ar_left_from_cells(cells, order_x, px);
    }

    SampledField out(f.x_grid, f.t_grid,
                     std::vector<double>(static_cast<std::size_t>(nx + 1) * (nt + 1), 0.0));
    std::vector<double> column(static_cast<std::size_t>(nt));
    for (int n = 0; n <= nx; ++n) {
        for (int j = 0; j < nt; ++j) {
            column[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
        }
        const auto mixed = detail::ar_left_from_cells(column, order_t, pt);
        for (int m = 0; m <= nt; ++m) {
            out.at(n, m) = mixed[static_cast<std::size_t>(m)];
        }
    }
    return out;
}

}  // namespace biorder
