#include "biorder/errors.hpp"
#include "biorder/oracle.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace biorder {

namespace {

// E_{b,g}(-x) = (1/pi) int_0^inf e^-r r^(b-g)
//     [r^b sin(pi g) + x sin(pi (g - b))] / (r^2b + 2 x r^b cos(pi b) + x^2) dr
// for 0 < b < 1, 0 < g < 1 + b.
QuadResult integral_form(double beta, double gam, double x)
{
    const double pi = std::numbers::pi;
    const double s_g = std::sin(pi * gam);
    const double s_gb = std::sin(pi * (gam - beta));
    const double c_b = std::cos(pi * beta);
    // Without the r^(b-g) factor.
    auto h = [=](double r) {
        const double rb = std::pow(r, beta);
        const double num = rb * s_g + x * s_gb;
        const double den = rb * rb + 2.0 * x * rb * c_b + x * x;
        return std::exp(-r) * num / den;
    };
    // On [0, 1] r = u^(1/p), p = 1 + b - g, absorbs r^(b-g) into the Jacobian.
    const double p = 1.0 + beta - gam;
    auto near = [=](double u) { return u <= 0.0 ? h(0.0) / p : h(std::pow(u, 1.0 / p)) / p; };
    auto far = [=](double r) { return std::pow(r, beta - gam) * h(r); };
    boost::math::quadrature::tanh_sinh<double> finite;
    boost::math::quadrature::exp_sinh<double> infinite;
    double e1 = 0.0;
    double e2 = 0.0;
    double l1a = 0.0;
    double l1b = 0.0;
    const double tol = 1e-14;
    const double a = finite.integrate(near, 0.0, 1.0, tol, &e1, &l1a);
    const double b = infinite.integrate(far, 1.0, std::numeric_limits<double>::infinity(), tol, &e2,
                                        &l1b);
    const double eps = std::numeric_limits<double>::epsilon();
    return QuadResult{(a + b) / pi, (e1 + e2 + 8.0 * eps * (l1a + l1b)) / pi};
}

}  // namespace

QuadResult mittag_leffler_by_integral(double beta, double gam, double x)
{
    if (!(beta > 0.0 && beta < 1.0)) {
        throw DomainError("mittag_leffler_by_integral: requires 0 < beta < 1");
    }
    if (!(gam > 0.0) || !(x > 0.0)) {
        throw DomainError("mittag_leffler_by_integral: requires gam > 0 and x > 0");
    }
    // Near g = 1 + b the representation is ill-conditioned, so it is used
    // only while p = 1 + b - g >= b / 2.
    if (gam <= 1.0 + 0.5 * beta) {
        return integral_form(beta, gam, x);
    }
    // Lower gam by beta: E_{b,g}(-x) = (1/Gamma(g - b) - E_{b,g-b}(-x)) / x.
    const QuadResult lower = mittag_leffler_by_integral(beta, gam - beta, x);
    const double r = 1.0 / std::tgamma(gam - beta);
    return QuadResult{(r - lower.value) / x,
                      (lower.err_estimate + std::numeric_limits<double>::epsilon() * std::fabs(r)) / x};
}

}  // namespace biorder
