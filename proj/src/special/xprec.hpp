#pragma once

// Extended-precision helpers shared by the series evaluators.

#include <cmath>
#include <limits>
#include <type_traits>
#include <quadmath.h>

namespace biorder::detail {

using quad = __float128;

inline long double xlog(long double x) { return std::log(x); }
inline quad xlog(quad x) { return logq(x); }
inline long double xexp(long double x) { return std::exp(x); }
inline quad xexp(quad x) { return expq(x); }
inline long double xabs(long double x) { return std::fabs(x); }
inline quad xabs(quad x) { return fabsq(x); }

inline long double xlgamma(long double x)
{
    int sign = 0;
    return lgammal_r(x, &sign);
}

// log Gamma for x > 0 in 113-bit arithmetic: upward recurrence to x >= 40,
// then the Stirling series. Reentrant, unlike lgammaq.
quad xlgamma(quad x);

template <class Real>
constexpr double xepsilon()
{
    if constexpr (std::is_same_v<Real, quad>) {
        return 1.925929944387235853e-34;  // 2^-112
    } else {
        return static_cast<double>(std::numeric_limits<Real>::epsilon());
    }
}

/// Reentrant log|Gamma(x)| for doubles.
inline double lgamma_abs(double x, int* sign)
{
    return lgamma_r(x, sign);
}

}  // namespace biorder::detail
