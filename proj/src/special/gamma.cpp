#include "biorder/errors.hpp"
#include "biorder/special_functions.hpp"
#include "xprec.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace biorder {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && std::floor(x) == x;
}

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x)
{
    double r = std::fmod(x, 2.0);
    if (r == 0.0 || std::fabs(r) == 1.0) {
        return 0.0;
    }
    return std::sin(std::numbers::pi * r);
}

void require_order(double value, const char* name)
{
    if (!(value > 0.0 && value < 1.0)) {
        throw DomainError(std::string(name) + " must lie strictly inside (0, 1), got " +
                          std::to_string(value));
    }
}

}  // namespace

BiOrder::BiOrder(double alpha, double beta, double a_of_beta)
    : alpha_(alpha), beta_(beta), a_of_beta_(a_of_beta), lambda_(0.0)
{
    require_order(alpha, "alpha");
    require_order(beta, "beta");
    if (!(a_of_beta > 0.0) || !std::isfinite(a_of_beta)) {
        throw DomainError("A(beta) must be positive and finite");
    }
    lambda_ = beta / (1.0 - beta);
}

BiOrder BiOrder::with_rate_override(double alpha, double beta, double lambda,
                                    double a_of_beta)
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("rate override must be nonnegative and finite");
    }
    BiOrder order(alpha, beta, a_of_beta);
    order.lambda_ = lambda;
    order.rate_overridden_ = true;
    return order;
}

BiOrder BiOrder::with_a_of_beta(double a) const
{
    BiOrder copy = rate_overridden_ ? with_rate_override(alpha_, beta_, lambda_, a)
                                    : BiOrder(alpha_, beta_, a);
    return copy;
}

double BiOrder::prefactor() const
{
    return a_of_beta_ / ((1.0 - beta_) * std::tgamma(1.0 - alpha_));
}

double gamma(double x)
{
    if (std::isnan(x)) {
        throw DomainError("gamma: NaN argument");
    }
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at nonpositive integer " + std::to_string(x));
    }
    const double value = std::tgamma(x);
    if (std::isinf(value)) {
        throw OverflowError("gamma: result overflows at x = " + std::to_string(x));
    }
    return value;
}

double rgamma(double x)
{
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    if (x > 170.0) {
        int sign = 0;
        return std::exp(-detail::lgamma_abs(x, &sign));
    }
    if (x < -170.0) {
        // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
        int sign = 0;
        const double s = sin_pi(x);
        const double mag = detail::lgamma_abs(1.0 - x, &sign) + std::log(std::fabs(s)) -
                           std::log(std::numbers::pi);
        return std::copysign(std::exp(mag), s);
    }
    return 1.0 / std::tgamma(x);
}

double rgamma_derivative(double x)
{
    if (is_nonpositive_integer(x)) {
        const double n = -x;
        const double sign = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
        return sign * std::tgamma(n + 1.0);
    }
    return -boost::math::digamma(x) * rgamma(x);
}

namespace detail {

quad xlgamma(quad x)
{
    // Bernoulli numbers B_2 .. B_30 as exact ratios.
    static constexpr long long num[] = {1,       -1,       1,       -1,      5,
                                        -691,    7,        -3617,   43867,   -174611,
                                        854513,  -236364091, 8553103, -23749461029LL,
                                        8615841276005LL};
    static constexpr long long den[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330,
                                        138, 2730, 6, 870, 14322};
    quad shift_product = 1;
    while (x < 40) {
        shift_product *= x;
        x += 1;
    }
    const quad half_log_two_pi = logq(8 * atanq(quad(1))) / 2;
    quad result = (x - quad(0.5)) * logq(x) - x + half_log_two_pi;
    const quad inv_x2 = 1 / (x * x);
    quad power = 1 / x;
    for (int k = 1; k <= 15; ++k) {
        const quad b = quad(num[k - 1]) / quad(den[k - 1]);
        result += b / (quad(2 * k) * quad(2 * k - 1)) * power;
        power *= inv_x2;
    }
    return result - logq(shift_product);
}

}  // namespace detail

}  // namespace biorder
