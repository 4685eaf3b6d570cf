#include "checks.hpp"

#include "biorder/operators.hpp"
#include "biorder/oracle.hpp"
#include "biorder/special_functions.hpp"
#include "biorder/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace biorder::checks {

namespace {

// Small-beta primitives near lambda y^sigma ~ 1 need well over the default
// 200 terms.
SeriesTruncation wide_budget()
{
    SeriesTruncation t;
    t.max_terms = 20000;
    return t;
}

OperatorOptions wide_options()
{
    OperatorOptions o;
    o.trunc = wide_budget();
    return o;
}

CheckResult make(const char* id, double alpha, double beta, double worst, double tol)
{
    CheckResult r;
    r.id = id;
    r.alpha = alpha;
    r.beta = beta;
    r.worst_error = worst;
    r.tolerance = tol;
    r.pass = std::isfinite(worst) && worst <= tol;
    return r;
}

double rel(double a, double b)
{
    return std::fabs(a - b) / std::max(std::fabs(b), std::numeric_limits<double>::min());
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::fabs(a[i] - b[i]));
    }
    return m;
}

}  // namespace

CheckResult ml_value_at_zero(double alpha, double beta)
{
    double worst = 0.0;
    for (double gam : {0.5, 1.0, 1.5, 2.0}) {
        worst = std::max(worst, std::fabs(mittag_leffler(beta, gam, 0.0) * gamma(gam) - 1.0));
    }
    return make("ml_value_at_zero", alpha, beta, worst, 1e-13);
}

CheckResult ml_integral_agreement(double alpha, double beta)
{
    double worst = 0.0;
    for (double gam : {1.0, 2.0 - alpha}) {
        for (double x : {0.5, 2.0, 10.0, 40.0}) {
            const QuadResult ref = mittag_leffler_by_integral(beta, gam, x);
            worst = std::max(worst, rel(mittag_leffler(beta, gam, -x), ref.value));
        }
    }
    return make("ml_integral_agreement", alpha, beta, worst, 1e-10);
}

CheckResult ml_seam(double alpha, double beta)
{
    double worst = 0.0;
    for (double gam : {1.0, 2.0 - alpha}) {
        worst = std::max(worst, mittag_leffler_seam(beta, gam).relative_gap);
    }
    return make("ml_seam", alpha, beta, worst, 1e-9);
}

CheckResult kernel_positivity(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    double violations = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double y = 1e-4 * std::pow(1e6, i / 60.0);
        if (!(kernel_value(order, y) > 0.0)) {
            violations += 1.0;
        }
    }
    return make("kernel_positivity", alpha, beta, violations, 0.0);
}

CheckResult primitive_quadrature(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    double worst = 0.0;
    for (double y : {0.1, 1.0, 5.0}) {
        const double p = kernel_primitive(order, y, wide_budget()).value;
        const QuadResult q = adaptive_singular_quad(
            [&](double v) { return kernel_value(order, v); }, 0.0, y, alpha, 1e-11);
        worst = std::max(worst, rel(p, q.value));
    }
    return make("primitive_quadrature", alpha, beta, worst, 1e-8);
}

CheckResult primitive_derivative(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const auto trunc = wide_budget();
    double worst = 0.0;
    for (double y : {0.1, 0.3, 1.0, 3.0, 10.0}) {
        const double h = 1e-5 * y;
        const double d = (kernel_primitive(order, y + h, trunc).value -
                          kernel_primitive(order, y - h, trunc).value) /
                         (2.0 * h);
        worst = std::max(worst, rel(d, kernel_value(order, y)));
    }
    return make("primitive_derivative", alpha, beta, worst, 1e-5);
}

CheckResult primitive_monotone(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const auto trunc = wide_budget();
    double violations = 0.0;
    double prev = 0.0;
    for (int i = 1; i <= 80; ++i) {
        const double y = 1e-3 * std::pow(1e5, i / 80.0);
        const double p = kernel_primitive(order, y, trunc).value;
        if (!(p > prev)) {
            violations += 1.0;
        }
        prev = p;
    }
    return make("primitive_monotone", alpha, beta, violations, 0.0);
}

CheckResult closed_form_dual(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const auto trunc = wide_budget();
    double worst = 0.0;
    for (double t : {0.05, 0.25, 0.5, 1.0, 1.5, 2.0}) {
        const double cf = ac_closed_form(TestFunction::monomial(1), order, t, trunc).value;
        const double ref = order.prefactor() * kernel_primitive(order, t, trunc).value;
        worst = std::max(worst, rel(cf, ref));
    }
    return make("closed_form_dual", alpha, beta, worst, 1e-9);
}

CheckResult ac_constants(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const Grid grid(0.0, 1.0, 256);
    const auto f = SampledFunction::sample(grid, [](double) { return 5.0; });
    const auto out = ac_derivative_grid(f, order, wide_options());
    double worst = 0.0;
    for (double v : out.values) {
        worst = std::max(worst, std::fabs(v));
    }
    return make("ac_constants", alpha, beta, worst, 1e-12);
}

CheckResult operator_linearity(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const auto opts = wide_options();
    const Grid grid(0.0, 1.0, 128);
    auto g = [](double t) { return std::sin(3.0 * t) + 0.5; };
    auto h = [](double t) { return std::exp(-t) * t; };
    const auto fg = SampledFunction::sample(grid, g);
    const auto fh = SampledFunction::sample(grid, h);
    const auto fc = SampledFunction::sample(grid, [&](double t) { return 2.0 * g(t) + 3.0 * h(t); });
    double worst = 0.0;
    for (int variant = 0; variant < 3; ++variant) {
        std::vector<double> a;
        std::vector<double> b;
        std::vector<double> c;
        if (variant == 0) {
            a = ac_derivative_grid(fg, order, opts).values;
            b = ac_derivative_grid(fh, order, opts).values;
            c = ac_derivative_grid(fc, order, opts).values;
        } else if (variant == 1) {
            a = ar_derivative_grid(fg, order, opts).values;
            b = ar_derivative_grid(fh, order, opts).values;
            c = ar_derivative_grid(fc, order, opts).values;
        } else {
            a = right_sided_derivative(fg, order, Variant::ac, opts).values;
            b = right_sided_derivative(fh, order, Variant::ac, opts).values;
            c = right_sided_derivative(fc, order, Variant::ac, opts).values;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double expect = 2.0 * a[i] + 3.0 * b[i];
            worst = std::max(worst, std::fabs(c[i] - expect) / std::max(1.0, std::fabs(expect)));
        }
    }
    return make("operator_linearity", alpha, beta, worst, 1e-12);
}

CheckResult theorem1_bound(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const auto opts = wide_options();
    const Grid grid(0.0, 1.0, 200);
    const double bound_kernel =
        order.prefactor() * kernel_primitive(order, grid.end() - grid.start(), opts.trunc).value;
    double violations = 0.0;
    for (const TestFunction& tf :
         {TestFunction::constant(5.0), TestFunction::monomial(1), TestFunction::monomial(2),
          TestFunction::monomial(3), TestFunction::exponential(-1.0), TestFunction::exponential(1.0),
          TestFunction::sine(2.0)}) {
        const auto f = SampledFunction::sample(grid, [&](double t) { return tf.value(t); });
        const auto out = ac_derivative_grid(f, order, opts);
        double slope_max = 0.0;
        for (int i = 0; i < grid.n_intervals(); ++i) {
            slope_max = std::max(slope_max, std::fabs(f.values[static_cast<std::size_t>(i) + 1] -
                                                      f.values[static_cast<std::size_t>(i)]) /
                                                grid.step());
        }
        double sup = 0.0;
        for (double v : out.values) {
            sup = std::max(sup, std::fabs(v));
        }
        const double bound = bound_kernel * slope_max;
        const bool affine = tf.kind == TestKind::constant ||
                            (tf.kind == TestKind::monomial && tf.param <= 1.0);
        // Constant-slope data reach the bound; everything else must stay
        // strictly below it.
        const bool ok = affine ? sup <= bound * (1.0 + 1e-12) + 1e-300 : sup < bound;
        if (!ok) {
            violations += 1.0;
        }
    }
    return make("theorem1_bound", alpha, beta, violations, 0.0);
}

CheckResult theorem3_commutation(double alpha, double beta)
{
    const BiOrder ox(alpha, beta);
    const BiOrder ot(beta, alpha);
    const Grid gx(0.0, 1.0, 16);
    const Grid gt(0.0, 2.0, 16);
    const auto f = SampledField::sample(gx, gt, [](double x, double t) { return std::exp(-x - t); });
    const auto a = ac_mixed_xt(f, ox, ot, EvalOrder::xt, wide_options());
    const auto b = ac_mixed_xt(f, ox, ot, EvalOrder::tx, wide_options());
    return make("theorem3_commutation", alpha, beta, max_abs_diff(a.values, b.values), 1e-12);
}

CheckResult reflection(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    const auto opts = wide_options();
    const double horizon = 2.0;
    const Grid grid(0.0, horizon, 64);
    auto f = [](double t) { return std::cos(t) + t * t; };
    const auto fs = SampledFunction::sample(grid, f);
    std::vector<double> mirrored(fs.values.rbegin(), fs.values.rend());
    const SampledFunction gs(grid, mirrored);
    double worst = 0.0;
    for (Variant v : {Variant::ac, Variant::ar}) {
        const auto right = right_sided_derivative(fs, order, v, opts).values;
        const auto left = v == Variant::ac ? ac_derivative_grid(gs, order, opts).values
                                           : ar_derivative_grid(gs, order, opts).values;
        const int n = grid.n_intervals();
        for (int i = 0; i < n; ++i) {
            const double expect = -left[static_cast<std::size_t>(n - i)];
            worst = std::max(worst, std::fabs(right[static_cast<std::size_t>(i)] - expect) /
                                        std::max(1.0, std::fabs(expect)));
        }
    }
    return make("reflection", alpha, beta, worst, 1e-10);
}

CheckResult laplace_series_bound(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    SeriesTruncation trunc;
    trunc.mode = TruncationMode::smallest_term;
    double worst = 0.0;
    for (double s : {50.0, 200.0}) {
        const SeriesResult series = laplace_kernel_series(order, s, trunc);
        const TransformValue quad = laplace_numeric(
            [&](double t) { return kernel_value(order, t); }, TransformQuery::laplace(s), alpha);
        const double gap = std::fabs(series.value - quad.value);
        worst = std::max(worst, gap / (series.err_estimate + quad.err_estimate));
    }
    return make("laplace_series_bound", alpha, beta, worst, 1.0);
}

CheckResult sumudu_duality(double alpha, double beta)
{
    const BiOrder order(alpha, beta);
    auto k = [&](double t) { return kernel_value(order, t); };
    double worst = 0.0;
    for (double u : {0.05, 0.5}) {
        const TransformValue s = sumudu_numeric(k, TransformQuery::sumudu(u), alpha);
        const TransformValue l = laplace_numeric(k, TransformQuery::laplace(1.0 / u), alpha);
        worst = std::max(worst, rel(s.value, l.value / u));
    }
    return make("sumudu_duality", alpha, beta, worst, 1e-8);
}

}  // namespace biorder::checks
