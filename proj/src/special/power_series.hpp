#pragma once

// Term-wise summation of  sum_j (+/-x)^j c_j  for coefficient sequences that
// eventually decay faster than any geometric series (gamma-type
// denominators). The caller supplies log|c_j|; terms are formed in the
// working type Real and rounding is tracked so the caller can decide
// whether to re-run in a wider type.

#include "xprec.hpp"

#include <algorithm>
#include <cmath>

namespace biorder::detail {

struct LogCoefficient {
    double log_abs;      ///< log|c_j| rounded to double (diagnostics)
    double log_scale;    ///< sum of |pieces| entering log|c_j|, for rounding
};

struct PowerSeriesOutcome {
    double value = 0.0;
    double truncation_error = 0.0;  ///< |first omitted term|
    double rounding_error = 0.0;
    double max_term = 0.0;
    int terms = 0;
    bool converged = false;
};

/// `log_coef(j, out_log_abs)` writes log|c_j| in type Real and returns the
/// magnitude of the pieces it was assembled from.
template <class Real, class LogCoef>
PowerSeriesOutcome sum_power_series(Real log_x, bool alternating, LogCoef&& log_coef,
                                    int max_terms, double abs_floor, double rel_floor)
{
    constexpr double eps = xepsilon<Real>();
    PowerSeriesOutcome out;
    Real sum = 0;
    Real max_abs = 0;
    int argmax = 0;
    double rounding = 0.0;
    const double abs_log_x = static_cast<double>(xabs(log_x));

    for (int j = 0; j < max_terms; ++j) {
        Real log_c = 0;
        const double scale = log_coef(j, log_c);
        const Real magnitude = xexp(Real(j) * log_x + log_c);
        const Real term = (alternating && (j % 2 == 1)) ? -magnitude : magnitude;

        const double mag_d = static_cast<double>(magnitude);
        const double floor = std::max(abs_floor, rel_floor * static_cast<double>(xabs(sum)));
        if (j > argmax && j > 0 && mag_d <= floor) {
            out.truncation_error = mag_d;
            out.converged = true;
            out.terms = j;
            break;
        }
        sum += term;
        rounding += mag_d * eps * (j * abs_log_x + scale + 8.0);
        if (magnitude > max_abs) {
            max_abs = magnitude;
            argmax = j;
        }
        out.terms = j + 1;
    }
    if (!out.converged) {
        Real log_c = 0;
        log_coef(max_terms, log_c);
        out.truncation_error = static_cast<double>(xexp(Real(max_terms) * log_x + log_c));
    }
    out.value = static_cast<double>(sum);
    out.rounding_error = rounding;
    out.max_term = static_cast<double>(max_abs);
    return out;
}

}  // namespace biorder::detail
