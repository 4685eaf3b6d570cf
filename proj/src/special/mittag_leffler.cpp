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

constexpr int kSeriesBudget = 200000;
constexpr double kSeriesRelFloor = 0x1p-62;
// Long-double sums are accepted when their rounding bound is below this
// fraction of the result; otherwise the sum is redone in 113-bit floats.
constexpr double kLongDoubleAcceptance = 0x1p-56;
// The asymptotic branch is taken only when it is good to double precision.
constexpr double kAsymptoticAcceptance = 4.0 * std::numeric_limits<double>::epsilon();
constexpr double kAsymptoticMinArgument = 0.5;
constexpr double kWarningLevel = 1e-10;

struct BranchResult {
    double value = 0.0;
    double err = std::numeric_limits<double>::infinity();
    bool converged = false;
    bool extended = false;
};

template <class Real>
detail::PowerSeriesOutcome ml_series_in(double beta, double gam, double x, bool alternating)
{
    const Real b = beta;
    const Real g = gam;
    auto coef = [&](int j, Real& log_c) {
        log_c = -detail::xlgamma(b * Real(j) + g);
        return std::fabs(static_cast<double>(log_c));
    };
    return detail::sum_power_series<Real>(detail::xlog(Real(x)), alternating, coef,
                                          kSeriesBudget, 0.0, kSeriesRelFloor);
}

BranchResult ml_series(double beta, double gam, double z)
{
    const bool alternating = z < 0.0;
    const double x = std::fabs(z);
    auto outcome = ml_series_in<long double>(beta, gam, x, alternating);
    bool extended = false;
    if (!std::isfinite(outcome.value)) {
        throw OverflowError("mittag_leffler: series overflows at z = " + std::to_string(z));
    }
    if (outcome.rounding_error > kLongDoubleAcceptance * std::fabs(outcome.value)) {
        outcome = ml_series_in<detail::quad>(beta, gam, x, alternating);
        extended = true;
    }
    BranchResult r;
    r.value = outcome.value;
    r.err = outcome.truncation_error + outcome.rounding_error +
            0.5 * std::numeric_limits<double>::epsilon() * std::fabs(outcome.value);
    r.converged = outcome.converged;
    r.extended = extended;
    return r;
}

long double rgamma_ld(long double x)
{
    if (x <= 0.0L && std::floor(x) == x) {
        return 0.0L;
    }
    if (std::fabs(x) < 150.0L) {
        return 1.0L / std::tgamma(x);
    }
    int sign = 0;
    const long double lg = lgammal_r(x, &sign);
    return sign * std::exp(-lg);
}

// log of the envelope |x^{-k} / Gamma(gam - beta k)|, bounded through the
// reflection formula once gam - beta k <= 0.
double log_asymptotic_envelope(double beta, double gam, double log_x, int k)
{
    const double arg = gam - beta * k;
    int sign = 0;
    double log_rg = 0.0;
    if (arg > 0.0) {
        log_rg = -detail::lgamma_abs(arg, &sign);
    } else {
        log_rg = detail::lgamma_abs(1.0 - arg, &sign) - std::log(std::numbers::pi);
    }
    return log_rg - k * log_x;
}

// E_{beta,gam}(-x) ~ sum_{k>=1} (-1)^{k-1} x^{-k} / Gamma(gam - beta k),
// optimally truncated: summation stops at the first term whose envelope
// exceeds its predecessor, and that first omitted envelope is the error.
BranchResult ml_asymptotic(double beta, double gam, double x)
{
    const double log_x = std::log(x);
    long double sum = 0.0L;
    double rounding = 0.0;
    double prev_env = std::numeric_limits<double>::infinity();
    int negligible_run = 0;
    BranchResult r;
    for (int k = 1; k <= 100000; ++k) {
        const double env = std::exp(log_asymptotic_envelope(beta, gam, log_x, k));
        negligible_run = env < 1e-21 * std::fabs(static_cast<double>(sum)) ? negligible_run + 1 : 0;
        // Both envelopes must come from the reflection bound: the switch from
        // the exact 1/Gamma to the bound is itself a jump upwards.
        const bool past_minimum = k > 1 && env > prev_env && gam - beta * (k - 1) <= 0.0;
        if (past_minimum || negligible_run == 2) {
            r.err = env;
            break;
        }
        const long double term = std::pow(static_cast<long double>(x), -k) *
                                 rgamma_ld(static_cast<long double>(gam) - beta * k);
        sum += (k % 2 == 1) ? term : -term;
        rounding += std::fabs(static_cast<double>(term)) *
                    std::numeric_limits<long double>::epsilon() * (k * std::fabs(log_x) + 8.0);
        prev_env = env;
    }
    r.value = static_cast<double>(sum);
    r.err += rounding + 0.5 * std::numeric_limits<double>::epsilon() * std::fabs(r.value);
    r.converged = true;
    return r;
}

void check_parameters(double beta, double gam)
{
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("mittag_leffler: beta must be positive, got " + std::to_string(beta));
    }
    if (!(gam > 0.0) || !std::isfinite(gam)) {
        throw DomainError("mittag_leffler: gamma must be positive, got " + std::to_string(gam));
    }
}

}  // namespace

MittagLefflerEval mittag_leffler_eval(double beta, double gam, double z)
{
    check_parameters(beta, gam);
    if (std::isnan(z)) {
        throw DomainError("mittag_leffler: NaN argument");
    }
    MittagLefflerEval out;
    if (z == 0.0) {
        out.value = rgamma(gam);
        out.err_estimate = std::numeric_limits<double>::epsilon() * std::fabs(out.value);
        out.method = MittagLefflerMethod::zero;
        return out;
    }

    BranchResult asym;
    const bool asymptotic_available = beta < 1.0 && z < 0.0 && -z >= kAsymptoticMinArgument;
    if (asymptotic_available) {
        asym = ml_asymptotic(beta, gam, -z);
        if (asym.err <= kAsymptoticAcceptance * std::fabs(asym.value)) {
            out.value = asym.value;
            out.err_estimate = asym.err;
            out.method = MittagLefflerMethod::asymptotic;
            return out;
        }
    }

    const BranchResult series = ml_series(beta, gam, z);
    if (asymptotic_available && asym.err < series.err) {
        out.value = asym.value;
        out.err_estimate = asym.err;
        out.method = MittagLefflerMethod::asymptotic;
    } else {
        out.value = series.value;
        out.err_estimate = series.err;
        out.method = MittagLefflerMethod::power_series;
        out.extended_precision = series.extended;
    }
    if (!series.converged && !(asymptotic_available && asym.err < series.err)) {
        throw NonconvergenceError("mittag_leffler: power series did not converge at z = " +
                                  std::to_string(z));
    }
    out.accuracy_warning = out.err_estimate > kWarningLevel * std::fabs(out.value);
    return out;
}

double mittag_leffler(double beta, double gam, double z)
{
    return mittag_leffler_eval(beta, gam, z).value;
}

SeamReport mittag_leffler_seam(double beta, double gam)
{
    check_parameters(beta, gam);
    if (!(beta < 1.0)) {
        throw DomainError("mittag_leffler_seam: requires beta < 1");
    }
    auto accepted = [&](double x) {
        const BranchResult a = ml_asymptotic(beta, gam, x);
        return a.err <= kAsymptoticAcceptance * std::fabs(a.value);
    };
    double lo = kAsymptoticMinArgument;
    double hi = 2.0;
    while (!accepted(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) {
            throw NonconvergenceError("mittag_leffler_seam: no crossover below 1e6");
        }
    }
    if (accepted(lo)) {
        hi = lo;
    } else {
        for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (accepted(mid) ? hi : lo) = mid;
        }
    }
    SeamReport report;
    report.crossover = hi;
    report.asymptotic_value = ml_asymptotic(beta, gam, hi).value;
    report.series_value = ml_series(beta, gam, -hi).value;
    report.relative_gap = std::fabs(report.series_value - report.asymptotic_value) /
                          std::fabs(report.series_value);
    return report;
}

}  // namespace biorder
