#include "biorder/errors.hpp"
#include "biorder/special_functions.hpp"
#include "xprec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace biorder {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRelFloor = 0x1p-60;
// Smallest-term mode stops once this many consecutive nonzero terms have
// stayed above the running minimum.
constexpr int kLookAhead = 4;

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && std::floor(x) == x;
}

struct LogTerm {
    double log_abs = -std::numeric_limits<double>::infinity();  ///< -inf for a zero term
    double sign = 0.0;
    double scale = 0.0;  ///< magnitude of the log pieces, for rounding
};

LogTerm wright_term(WrightPair a1, WrightPair a2, WrightPair b1, double log_abs_z, bool z_negative,
                    int r)
{
    const double ga = a1.a + a1.scale * r;
    const double gb = a2.a + a2.scale * r;
    const double gc = b1.a + b1.scale * r;
    if (is_nonpositive_integer(ga) || is_nonpositive_integer(gb)) {
        throw PoleError("wright_2psi1: numerator gamma pole at term " + std::to_string(r));
    }
    LogTerm t;
    if (is_nonpositive_integer(gc)) {
        return t;
    }
    int sa = 0;
    int sb = 0;
    int sc = 0;
    int sr = 0;
    const double la = detail::lgamma_abs(ga, &sa);
    const double lb = detail::lgamma_abs(gb, &sb);
    const double lc = detail::lgamma_abs(gc, &sc);
    const double lr = detail::lgamma_abs(r + 1.0, &sr);
    const double lz = r == 0 ? 0.0 : r * log_abs_z;
    t.log_abs = la + lb - lc - lr + lz;
    t.sign = static_cast<double>(sa * sb * sc);
    if (z_negative && r % 2 == 1) {
        t.sign = -t.sign;
    }
    t.scale = std::fabs(la) + std::fabs(lb) + std::fabs(lc) + std::fabs(lr) + std::fabs(lz);
    return t;
}

}  // namespace

SeriesResult wright_2psi1(WrightPair a1, WrightPair a2, WrightPair b1, double z,
                          const SeriesTruncation& trunc)
{
    trunc.validate();
    if (!std::isfinite(z)) {
        throw DomainError("wright_2psi1: argument must be finite");
    }
    if (!(a1.scale > 0.0) || !(a2.scale > 0.0) || !(b1.scale > 0.0)) {
        throw DomainError("wright_2psi1: scale parameters must be positive");
    }

    const double index = b1.scale - a1.scale - a2.scale;
    bool divergent = index < -1.0;
    if (index == -1.0) {
        const double log_rho = b1.scale * std::log(b1.scale) - a1.scale * std::log(a1.scale) -
                               a2.scale * std::log(a2.scale);
        divergent = z != 0.0 && std::log(std::fabs(z)) >= log_rho;
    }
    if (divergent && z != 0.0 && trunc.mode == TruncationMode::convergent) {
        throw DivergenceError("wright_2psi1: parameter set is divergent (index " +
                              std::to_string(index) + "); use smallest_term mode");
    }

    SeriesResult out;
    if (z == 0.0) {
        const LogTerm t0 = wright_term(a1, a2, b1, 0.0, false, 0);
        out.value = t0.sign * std::exp(t0.log_abs);
        out.err_estimate = kEps * (t0.scale + 4.0) * std::fabs(out.value);
        out.terms = 1;
        out.converged = true;
        return out;
    }

    const double log_abs_z = std::log(std::fabs(z));
    const bool z_negative = z < 0.0;
    const bool smallest = trunc.mode == TruncationMode::smallest_term;

    // Terms are generated ahead of summation so the smallest one can be
    // located before committing to a cut.
    std::vector<LogTerm> terms;
    terms.reserve(static_cast<std::size_t>(std::min(trunc.max_terms + 1, 4096)));
    double max_log = -std::numeric_limits<double>::infinity();
    int argmax = 0;
    int argmin = -1;
    int above_min = 0;
    int cut = -1;        // index of the first omitted term
    bool floor_hit = false;
    long double running = 0.0L;

    for (int r = 0; r <= trunc.max_terms; ++r) {
        const LogTerm t = wright_term(a1, a2, b1, log_abs_z, z_negative, r);
        terms.push_back(t);
        if (r == trunc.max_terms) {
            break;
        }
        const bool zero = t.sign == 0.0;
        if (!zero && t.log_abs > max_log) {
            max_log = t.log_abs;
            argmax = r;
        }
        if (!zero) {
            const double mag = std::exp(t.log_abs);
            const double floor =
                std::max(trunc.abs_floor, kRelFloor * std::fabs(static_cast<double>(running)));
            if (r > argmax && mag <= floor) {
                cut = r;
                floor_hit = true;
                break;
            }
            if (smallest) {
                if (argmin < 0 || t.log_abs < terms[static_cast<std::size_t>(argmin)].log_abs) {
                    argmin = r;
                    above_min = 0;
                } else if (++above_min >= kLookAhead) {
                    cut = argmin;
                    break;
                }
            }
            running += t.sign * mag;
        }
    }

    if (cut < 0) {
        if (smallest) {
            // Budget exhausted: keep every computed term unless an earlier
            // one was smaller than the first term past the budget.
            const LogTerm& last = terms.back();
            const bool earlier_smaller =
                argmin >= 0 && (last.sign == 0.0 ? false
                                                 : terms[static_cast<std::size_t>(argmin)].log_abs <
                                                       last.log_abs);
            cut = earlier_smaller ? argmin : trunc.max_terms;
        } else {
            throw TruncationBudgetExceeded("wright_2psi1: no convergence within " +
                                           std::to_string(trunc.max_terms) + " terms");
        }
    }

    long double sum = 0.0L;
    double rounding = 0.0;
    for (int r = 0; r < cut; ++r) {
        const LogTerm& t = terms[static_cast<std::size_t>(r)];
        if (t.sign == 0.0) {
            continue;
        }
        const double mag = std::exp(t.log_abs);
        sum += t.sign * mag;
        rounding += mag * kEps * (t.scale + 8.0);
    }
    const LogTerm& omitted = terms[static_cast<std::size_t>(cut)];
    out.value = static_cast<double>(sum);
    out.truncation_error = omitted.sign == 0.0 ? 0.0 : std::exp(omitted.log_abs);
    out.err_estimate = out.truncation_error + rounding + kEps * std::fabs(out.value);
    out.terms = cut;
    out.converged = floor_hit && !divergent;
    return out;
}

}  // namespace biorder
