#include "weights.hpp"

#include "biorder/errors.hpp"
#include "biorder/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace biorder {

namespace {

// Arguments of the kernel primitive beyond this are outside the validated
// range; the tail estimate uses it as a proxy for infinity.
constexpr double kLargestValidated = 100.0;

struct RightSided {
    std::vector<double> values;  // nodes 0..N-1
    double truncation = 0.0;
    double tail = 0.0;
    std::vector<std::string> warnings;
};

RightSided evaluate(const SampledFunction& f, const BiOrder& order, Variant variant,
                    const OperatorOptions& opts)
{
    const Grid& grid = f.grid;
    const int n_cells = grid.n_intervals();
    const double step = grid.step();
    const double cpref = order.prefactor();
    RightSided out;
    out.values.assign(static_cast<std::size_t>(n_cells), 0.0);

    if (variant == Variant::ac) {
        const auto weights = detail::make_weights(order, step, n_cells, opts.scheme, opts.trunc);
        const auto slopes = detail::forward_slopes(f.values, step, weights.slope_scale);
        for (int n = 0; n < n_cells; ++n) {
            double acc = 0.0;
            for (int i = n; i < n_cells; ++i) {
                acc += slopes[static_cast<std::size_t>(i)] *
                       weights.w[static_cast<std::size_t>(i + 1 - n)];
            }
            out.values[static_cast<std::size_t>(n)] = cpref * acc;
        }
        out.warnings = weights.warnings;
        double slope_l1 = 0.0;
        for (double s : slopes) {
            slope_l1 += std::fabs(s);
        }
        out.truncation = cpref * slope_l1 * weights.max_error;
    } else {
        const detail::PrimitiveTable table(order, step, n_cells, opts.trunc);
        const auto cells = detail::cell_means(f.values);
        const double c_last = cells.back();
        std::vector<double> rest(static_cast<std::size_t>(n_cells) + 1, 0.0);
        for (int n = 0; n < n_cells; ++n) {
            double acc = 0.0;
            for (int i = n; i + 1 < n_cells; ++i) {
                acc += (cells[static_cast<std::size_t>(i)] - c_last) *
                       (table[i + 1 - n] - table[i - n]);
            }
            rest[static_cast<std::size_t>(n)] = cpref * acc;
        }
        for (int n = 0; n < n_cells; ++n) {
            const double singular =
                c_last == 0.0 ? 0.0 : -cpref * c_last * kernel_value(order, (n_cells - n) * step);
            const double smooth =
                n > 0 ? (rest[static_cast<std::size_t>(n) + 1] - rest[static_cast<std::size_t>(n) - 1]) /
                            (2.0 * step)
                      : (rest[1] - rest[0]) / step;
            out.values[static_cast<std::size_t>(n)] = singular + smooth;
        }
        if (opts.scheme == Scheme::paper_literal) {
            out.warnings.push_back(
                "paper_literal applies to the A.C scheme only; A.R used exact weights");
        }
        double cell_l1 = 0.0;
        for (double c : cells) {
            cell_l1 += std::fabs(c);
        }
        out.truncation = cpref * cell_l1 * 2.0 * table.max_error() / step;
    }

    // Tail beyond the horizon, with P at the largest validated argument as
    // the stand-in for P(infinity).
    double sup = 0.0;
    for (double v : f.values) {
        sup = std::max(sup, std::fabs(v));
    }
    const double span = n_cells * step;
    if (span < kLargestValidated && sup > 0.0) {
        // Largest at the node next to the horizon, where H - x = step.
        const double p_far = kernel_primitive(order, kLargestValidated, opts.trunc).value;
        const double p_near = kernel_primitive(order, step, opts.trunc).value;
        out.tail = sup * cpref * std::max(0.0, p_far - p_near);
        out.warnings.push_back("integral truncated at horizon " + std::to_string(grid.end()) +
                               "; tail bound " + std::to_string(out.tail));
    }
    return out;
}

}  // namespace

OperatorOutput right_sided_derivative(const SampledFunction& f, const BiOrder& order,
                                      Variant variant, const OperatorOptions& opts)
{
    RightSided r = evaluate(f, order, variant, opts);
    OperatorOutput out;
    out.values = std::move(r.values);
    out.scheme = variant == Variant::ac ? opts.scheme : Scheme::corrected;
    out.variant = variant;
    out.truncation_estimate = r.truncation;
    out.tail_estimate = r.tail;
    out.warnings = std::move(r.warnings);
    return out;
}

double right_sided_derivative_at(const SampledFunction& f, const BiOrder& order, Variant variant,
                                 int node, const OperatorOptions& opts)
{
    if (node < 0) {
        throw IndexError("right_sided_derivative_at: negative node index");
    }
    if (node >= f.grid.n_intervals()) {
        throw HorizonError("right_sided_derivative_at: horizon " + std::to_string(f.grid.end()) +
                           " does not exceed x = " + std::to_string(f.grid.node(node)));
    }
    return evaluate(f, order, variant, opts).values[static_cast<std::size_t>(node)];
}

}  // namespace biorder
