#include "biorder/errors.hpp"
#include "biorder/oracle.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace biorder {

namespace {

constexpr int kPanelBudget = 4000;

struct Panel {
    double a;
    double b;
    double value;
    double err;
    double l1;
    bool operator<(const Panel& other) const { return err < other.err; }
};

template <class F>
Panel gk_panel(const F& f, double a, double b)
{
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    double unused = 0.0;
    double l1 = 0.0;
    const double k = gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &unused, &l1);
    const double g = gauss<double, 15>::integrate(f, a, b);
    return Panel{a, b, k, std::fabs(k - g), std::fabs(l1)};
}

// Globally adaptive bisection: the panel with the largest error estimate is
// split until the summed estimate meets tol relative to the result.
template <class F>
QuadResult adaptive_gk(const F& f, double a, double b, double tol)
{
    std::priority_queue<Panel> panels;
    panels.push(gk_panel(f, a, b));
    double value = panels.top().value;
    double err = panels.top().err;
    double l1 = panels.top().l1;
    int count = 1;
    while (err > tol * std::fabs(value) && err > 1e-300) {
        if (count >= kPanelBudget) {
            throw NonconvergenceError("adaptive quadrature: panel budget exhausted with error " +
                                      std::to_string(err) + " on [" + std::to_string(a) + ", " +
                                      std::to_string(b) + "]");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gk_panel(f, worst.a, mid);
        const Panel right = gk_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        l1 += left.l1 + right.l1 - worst.l1;
        panels.push(left);
        panels.push(right);
        count += 1;
    }
    // Re-add exactly to shed the drift of the running updates.
    value = 0.0;
    err = 0.0;
    l1 = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        err += panels.top().err;
        l1 += panels.top().l1;
        panels.pop();
    }
    return QuadResult{value, err + 4.0 * std::numeric_limits<double>::epsilon() * l1};
}

}  // namespace

QuadResult adaptive_singular_quad_offset(const std::function<double(double, double)>& g, double lo,
                                         double hi, double alpha, double tol)
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("adaptive_singular_quad: need finite lo < hi");
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw DomainError("adaptive_singular_quad: singularity exponent must lie in [0, 1)");
    }
    if (!(tol > 0.0)) {
        throw DomainError("adaptive_singular_quad: tolerance must be positive");
    }
    const double half = 0.5 * (hi - lo);
    const double split = lo + half;
    // y = lo + z^p, dy = p z^(p-1) dz with p = 1 / (1 - alpha).
    const double p = 1.0 / (1.0 - alpha);
    auto mapped = [&](double z) {
        if (z <= 0.0) {
            return 0.0;
        }
        const double d = std::pow(z, p);
        return g(lo + d, d) * p * std::pow(z, p - 1.0);
    };
    const double z_max = std::pow(half, 1.0 - alpha);
    const QuadResult near = adaptive_gk(mapped, 0.0, z_max, 0.5 * tol);
    const QuadResult far = adaptive_gk([&](double y) { return g(y, y - lo); }, split, hi, 0.5 * tol);
    return QuadResult{near.value + far.value, near.err_estimate + far.err_estimate};
}

QuadResult adaptive_singular_quad(const std::function<double(double)>& g, double lo, double hi,
                                  double alpha, double tol)
{
    return adaptive_singular_quad_offset([&](double y, double) { return g(y); }, lo, hi, alpha,
                                         tol);
}

QuadResult tanh_sinh_quad(const std::function<double(double)>& g, double lo, double hi, double tol)
{
    if (!(lo < hi)) {
        throw DomainError("tanh_sinh_quad: need lo < hi");
    }
    boost::math::quadrature::tanh_sinh<double> integrator;
    double err = 0.0;
    double l1 = 0.0;
    std::size_t levels = 0;
    const double value = integrator.integrate(g, lo, hi, tol, &err,
                                              &l1, &levels);
    if (!std::isfinite(value)) {
        throw NonconvergenceError("tanh_sinh_quad: non-finite result");
    }
    return QuadResult{value, err + 4.0 * std::numeric_limits<double>::epsilon() * l1};
}

}  // namespace biorder
