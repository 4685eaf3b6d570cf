#include "weights.hpp"

#include "biorder/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace biorder::detail {

namespace {

constexpr double kWarnRelative = 1e-10;

}  // namespace

PrimitiveTable::PrimitiveTable(const BiOrder& order, double step, int count,
                               const SeriesTruncation& trunc)
    : p_(static_cast<std::size_t>(count) + 1, 0.0), step_(step)
{
    for (int k = 1; k <= count; ++k) {
        const SeriesResult r = kernel_primitive(order, k * step, trunc);
        p_[static_cast<std::size_t>(k)] = r.value;
        max_err_ = std::max(max_err_, r.err_estimate);
    }
}

double literal_weight(const BiOrder& order, double step, int k)
{
    const double c = 1.0 - order.alpha();
    const double near = (k - 1) * step;
    const double far = k * step;
    const double ml = mittag_leffler(order.beta(), 2.0 - order.alpha(),
                                     -order.lambda() * std::pow(near, order.sigma()));
    return std::pow(near, c) * ml - std::pow(far, c) * ml;
}

WeightTable make_weights(const BiOrder& order, double step, int count, Scheme scheme,
                         const SeriesTruncation& trunc)
{
    WeightTable out;
    out.w.assign(static_cast<std::size_t>(count) + 1, 0.0);
    if (scheme == Scheme::corrected) {
        const PrimitiveTable table(order, step, count, trunc);
        for (int k = 1; k <= count; ++k) {
            out.w[static_cast<std::size_t>(k)] = table[k] - table[k - 1];
        }
        out.max_error = 2.0 * table.max_error();
        if (table.max_error() > kWarnRelative * table[count]) {
            out.warnings.push_back("kernel primitive error estimate " +
                                   std::to_string(table.max_error()) + " exceeds 1e-10 relative");
        }
    } else {
        for (int k = 1; k <= count; ++k) {
            out.w[static_cast<std::size_t>(k)] = literal_weight(order, step, k);
        }
        out.slope_scale = 0.5;
        out.warnings.push_back("paper_literal weights do not integrate the kernel exactly");
    }
    return out;
}

std::vector<double> forward_slopes(const std::vector<double>& values, double step, double scale)
{
    std::vector<double> s(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        s[i] = scale * (values[i + 1] - values[i]) / step;
    }
    return s;
}

std::vector<double> cell_means(const std::vector<double>& values)
{
    std::vector<double> m(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        m[i] = 0.5 * (values[i] + values[i + 1]);
    }
    return m;
}

std::vector<double> ac_left_from_slopes(const std::vector<double>& slopes, double prefactor,
                                        const WeightTable& weights)
{
    const int n_cells = static_cast<int>(slopes.size());
    std::vector<double> out(static_cast<std::size_t>(n_cells) + 1, 0.0);
    for (int n = 1; n <= n_cells; ++n) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += slopes[static_cast<std::size_t>(i)] * weights.w[static_cast<std::size_t>(n - i)];
        }
        out[static_cast<std::size_t>(n)] = prefactor * acc;
    }
    return out;
}

std::vector<double> ar_left_from_cells(const std::vector<double>& cells, const BiOrder& order,
                                       const PrimitiveTable& table)
{
    const int n_cells = static_cast<int>(cells.size());
    const double step = table.step();
    const double cpref = order.prefactor();
    const double c0 = cells.front();

    // Convolution of (cells - c0); its derivative is smooth.
    std::vector<double> rest(static_cast<std::size_t>(n_cells) + 1, 0.0);
    for (int n = 1; n <= n_cells; ++n) {
        double acc = 0.0;
        for (int i = 1; i < n; ++i) {
            acc += (cells[static_cast<std::size_t>(i)] - c0) * (table[n - i] - table[n - i - 1]);
        }
        rest[static_cast<std::size_t>(n)] = cpref * acc;
    }

    std::vector<double> out(static_cast<std::size_t>(n_cells) + 1, 0.0);
    out[0] = cpref * c0 * table[1] / step;
    for (int n = 1; n <= n_cells; ++n) {
        const double singular = c0 == 0.0 ? 0.0 : cpref * c0 * kernel_value(order, n * step);
        const double smooth =
            n < n_cells ? (rest[static_cast<std::size_t>(n) + 1] - rest[static_cast<std::size_t>(n) - 1]) /
                              (2.0 * step)
                        : (rest[static_cast<std::size_t>(n)] - rest[static_cast<std::size_t>(n) - 1]) / step;
        out[static_cast<std::size_t>(n)] = singular + smooth;
    }
    return out;
}

}  // namespace biorder::detail
