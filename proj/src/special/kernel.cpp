#include "biorder/errors.hpp"
#include "biorder/special_functions.hpp"
#include "power_series.hpp"
#include "xprec.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace biorder {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesRelFloor = 0x1p-62;
constexpr double kLongDoubleAcceptance = 0x1p-56;
constexpr double kAsymptoticAcceptance = 16.0 * kEps;
// Below this x = lambda y^sigma the large-argument expansion is never tried.
constexpr double kAsymptoticMinArgument = 1.0;
// The residue pair (constant + k = m term) is interpolated in tau = c / sigma
// when tau lies this close to an integer.
constexpr double kPairWindow = 1e-4;
constexpr double kPairStep = 1e-3;
// Accept a finished asymptotic value in place of an over-budget series.
constexpr double kFallbackAcceptance = 1e-10;

struct Branch {
    double value = 0.0;
    double err = std::numeric_limits<double>::infinity();
    double truncation = 0.0;
    int terms = 0;
};

// log of a bound on |1 / Gamma(z)|; exact for z > 0 and the reflection bound
// Gamma(1 - z) / pi otherwise.
double log_rgamma_bound(double z)
{
    int sign = 0;
    if (z > 0.0) {
        return -detail::lgamma_abs(z, &sign);
    }
    return detail::lgamma_abs(1.0 - z, &sign) - std::log(std::numbers::pi);
}

// (pi / sin(pi tau)) x^{-tau} rgamma(1 - beta tau)
//   - (-1)^m x^{-m} rgamma(1 - beta m) / (tau - m)
// which is regular at tau = m.
double residue_pair(double beta, double log_x, int m, double tau)
{
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    const double u = 1.0 - beta * m;
    if (tau == m) {
        return sign_m * std::exp(-m * log_x) *
               (-log_x * rgamma(u) - beta * rgamma_derivative(u));
    }
    const double first = std::numbers::pi / std::sin(std::numbers::pi * tau) *
                         std::exp(-tau * log_x) * rgamma(1.0 - beta * tau);
    const double second = sign_m * std::exp(-m * log_x) * rgamma(u) / (tau - m);
    return first - second;
}

// P(y) = P_inf + y^c sum_{k>=1} (-1)^{k-1} x^{-k} rgamma(1 - beta k) / (c - sigma k)
// for x = lambda y^sigma large. P_inf is the finite part of the integral of
// the kernel over (0, inf).
Branch primitive_asymptotic(const BiOrder& order, double y)
{
    const double beta = order.beta();
    const double sigma = order.sigma();
    const double c = 1.0 - order.alpha();
    const double log_y = std::log(y);
    const double log_x = std::log(order.lambda()) + sigma * log_y;
    const double tau = c / sigma;
    const int m = static_cast<int>(std::lround(tau));
    const bool pair = m >= 1 && std::fabs(tau - m) < kPairWindow;

    long double sum = 0.0L;
    double rounding = 0.0;
    if (pair) {
        const double scale = std::exp(c * log_y) / sigma;
        double p = 0.0;
        if (tau == m) {
            p = residue_pair(beta, log_x, m, tau);
        } else {
            // Quadratic interpolation through tau = m - h, m, m + h.
            const double h = kPairStep;
            const double fm = residue_pair(beta, log_x, m, m - h);
            const double f0 = residue_pair(beta, log_x, m, m);
            const double fp = residue_pair(beta, log_x, m, m + h);
            const double d = (tau - m) / h;
            p = f0 + 0.5 * d * (fp - fm) + 0.5 * d * d * (fp - 2.0 * f0 + fm);
            rounding += 1e3 * kEps * (std::fabs(fm) + std::fabs(fp)) * scale;
        }
        sum += scale * p;
        const double u = 1.0 - beta * m;
        rounding += 4.0 * kEps * scale * std::exp(-m * log_x) *
                        (std::fabs(log_x * rgamma(u)) + std::fabs(beta * rgamma_derivative(u))) +
                    4.0 * kEps * std::fabs(scale * p);
    } else {
        const double p_inf = std::numbers::pi / sigma *
                             std::exp(-tau * std::log(order.lambda())) *
                             rgamma(1.0 - beta * tau) / std::sin(std::numbers::pi * tau);
        sum += p_inf;
        rounding += 8.0 * kEps * std::fabs(p_inf);
    }

    Branch r;
    double prev_env = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 100000; ++k) {
        if (pair && k == m) {
            continue;
        }
        const double denom = c - sigma * k;
        const double log_env = c * log_y - k * log_x + log_rgamma_bound(1.0 - beta * k) -
                               std::log(std::fabs(denom));
        const double env = std::exp(log_env);
        const bool past_minimum =
            k > 1 && env > prev_env && 1.0 - beta * (k - 1) <= 0.0 && k > tau;
        if (past_minimum) {
            r.truncation = env;
            break;
        }
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        const double term = sign * std::exp(c * log_y - k * log_x) * rgamma(1.0 - beta * k) / denom;
        sum += term;
        rounding += std::fabs(term) * kEps * (k * std::fabs(log_x) + 8.0);
        prev_env = env;
        r.terms = k;
        if (env < 1e-22 * std::fabs(static_cast<double>(sum)) && 1.0 - beta * k <= 0.0 && k > tau) {
            r.truncation = env;
            break;
        }
    }
    r.value = static_cast<double>(sum);
    r.err = r.truncation + rounding;
    return r;
}

template <class Real>
detail::PowerSeriesOutcome primitive_series_in(const BiOrder& order, double x, int max_terms,
                                               double abs_floor)
{
    const Real b = order.beta();
    const Real s = order.sigma();
    const Real c = 1.0 - order.alpha();
    auto coef = [&](int j, Real& log_c) {
        const Real lg = detail::xlgamma(b * Real(j) + Real(1));
        const Real ld = detail::xlog(c + s * Real(j));
        log_c = -lg - ld;
        return static_cast<double>(detail::xabs(lg) + detail::xabs(ld));
    };
    return detail::sum_power_series<Real>(detail::xlog(Real(x)), true, coef, max_terms,
                                          abs_floor, kSeriesRelFloor);
}

}  // namespace

double kernel_value(const BiOrder& order, double y)
{
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw DomainError("kernel_value: y must be positive and finite, got " + std::to_string(y));
    }
    const double power = std::pow(y, -order.alpha());
    if (order.lambda() == 0.0) {
        return power;
    }
    return power * mittag_leffler(order.beta(), 1.0, -order.lambda() * std::pow(y, order.sigma()));
}

SeriesResult kernel_primitive(const BiOrder& order, double y, const SeriesTruncation& trunc)
{
    trunc.validate();
    if (!(y >= 0.0) || !std::isfinite(y)) {
        throw DomainError("kernel_primitive: y must be nonnegative and finite, got " +
                          std::to_string(y));
    }
    SeriesResult out;
    if (y == 0.0) {
        return out;
    }
    const double c = 1.0 - order.alpha();
    const double y_c = std::pow(y, c);
    if (order.lambda() == 0.0) {
        out.value = y_c / c;
        out.err_estimate = kEps * out.value;
        out.terms = 1;
        return out;
    }

    const double x = order.lambda() * std::pow(y, order.sigma());
    Branch asym;
    const bool asymptotic_available = x >= kAsymptoticMinArgument;
    if (asymptotic_available) {
        asym = primitive_asymptotic(order, y);
        if (asym.err <= kAsymptoticAcceptance * std::fabs(asym.value)) {
            out.value = asym.value;
            out.err_estimate = asym.err;
            out.truncation_error = asym.truncation;
            out.terms = asym.terms;
            return out;
        }
    }

    const double floor = trunc.abs_floor / y_c;
    auto series = primitive_series_in<long double>(order, x, trunc.max_terms, floor);
    if (series.converged && series.rounding_error > kLongDoubleAcceptance * std::fabs(series.value)) {
        series = primitive_series_in<detail::quad>(order, x, trunc.max_terms, floor);
    }
    if (!std::isfinite(series.value)) {
        if (asymptotic_available && asym.err <= kFallbackAcceptance * std::fabs(asym.value)) {
            out.value = asym.value;
            out.err_estimate = asym.err;
            out.truncation_error = asym.truncation;
            out.terms = asym.terms;
            return out;
        }
        throw OverflowError("kernel_primitive: series overflows at y = " + std::to_string(y));
    }
    const double series_err = y_c * (series.truncation_error + series.rounding_error) +
                              0.5 * kEps * y_c * std::fabs(series.value);
    const bool prefer_asymptotic =
        asymptotic_available &&
        (asym.err < series_err ||
         (!series.converged && asym.err <= kFallbackAcceptance * std::fabs(asym.value)));
    if (prefer_asymptotic) {
        out.value = asym.value;
        out.err_estimate = asym.err;
        out.truncation_error = asym.truncation;
        out.terms = asym.terms;
        return out;
    }
    if (!series.converged && trunc.mode == TruncationMode::convergent) {
        throw TruncationBudgetExceeded("kernel_primitive: series needs more than " +
                                       std::to_string(trunc.max_terms) + " terms at y = " +
                                       std::to_string(y));
    }
    out.value = y_c * series.value;
    out.err_estimate = series_err;
    out.truncation_error = y_c * series.truncation_error;
    out.terms = series.terms;
    out.converged = series.converged;
    return out;
}

double kernel_primitive_paper_literal(const BiOrder& order, double y)
{
    if (!(y >= 0.0) || !std::isfinite(y)) {
        throw DomainError("kernel_primitive_paper_literal: y must be nonnegative, got " +
                          std::to_string(y));
    }
    if (y == 0.0) {
        return 0.0;
    }
    const double x = order.lambda() * std::pow(y, order.sigma());
    return std::pow(y, 1.0 - order.alpha()) * mittag_leffler(order.beta(), 2.0, -x);
}

}  // namespace biorder
