#include "biorder/errors.hpp"
#include "biorder/oracle.hpp"
#include "special/xprec.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace biorder {

using detail::quad;

SeriesResult ac_closed_form(const TestFunction& tf, const BiOrder& order, double t,
                            const SeriesTruncation& trunc)
{
    trunc.validate();
    if (tf.kind != TestKind::constant && tf.kind != TestKind::monomial) {
        throw UnsupportedKind("ac_closed_form: only constants and monomials have a closed form, got " +
                              tf.name());
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("ac_closed_form: t must be nonnegative, got " + std::to_string(t));
    }
    SeriesResult out;
    if (tf.kind == TestKind::constant || tf.param == 0.0 || t == 0.0) {
        return out;
    }

    const quad k = tf.param;
    const quad c = 1.0 - order.alpha();
    const quad sigma = order.sigma();
    const quad beta = order.beta();
    const quad log_t = logq(quad(t));
    const bool rate_zero = order.lambda() == 0.0;
    const quad log_x = rate_zero ? quad(0) : logq(quad(order.lambda())) + sigma * log_t;
    // log of k Gamma(k) = log Gamma(k + 1)
    const quad log_kgk = detail::xlgamma(k + 1);

    quad sum = 0;
    quad max_abs = 0;
    int argmax = 0;
    const int limit = rate_zero ? 1 : trunc.max_terms;
    int j = 0;
    bool done = false;
    for (; j < limit; ++j) {
        const quad e = c + sigma * j;
        // Beta(k, e) in log space, divided by Gamma(beta j + 1).
        const quad log_term = log_kgk + detail::xlgamma(e) - detail::xlgamma(k + e) -
                              detail::xlgamma(beta * j + 1) + j * log_x +
                              (k - quad(order.alpha())) * log_t;
        const quad mag = expq(log_term);
        if (j > argmax && mag <= fmaxq(quad(trunc.abs_floor), quad(0x1p-80) * fabsq(sum))) {
            out.truncation_error = static_cast<double>(mag * quad(order.prefactor()));
            done = true;
            break;
        }
        sum += (j % 2 == 0) ? mag : -mag;
        if (mag > max_abs) {
            max_abs = mag;
            argmax = j;
        }
    }
    if (rate_zero) {
        done = true;
    }
    if (!done && trunc.mode == TruncationMode::convergent) {
        throw TruncationBudgetExceeded("ac_closed_form: series needs more than " +
                                       std::to_string(trunc.max_terms) + " terms at t = " +
                                       std::to_string(t));
    }
    const double cpref = order.prefactor();
    out.value = static_cast<double>(sum) * cpref;
    out.terms = j;
    out.converged = done;
    out.err_estimate = out.truncation_error +
                       1e-30 * static_cast<double>(max_abs) * cpref +
                       std::numeric_limits<double>::epsilon() * std::fabs(out.value);
    return out;
}

QuadResult ac_by_quadrature(const TestFunction& tf, const BiOrder& order, double t, double a,
                            double tol)
{
    if (!(t > a)) {
        throw DomainError("ac_by_quadrature: need t > a");
    }
    if (tf.kind == TestKind::constant) {
        return {};
    }
    auto integrand = [&](double y) {
        return y <= 0.0 ? 0.0 : tf.derivative(t - y) * kernel_value(order, y);
    };
    const QuadResult q = adaptive_singular_quad(integrand, 0.0, t - a, order.alpha(), tol);
    const double cpref = order.prefactor();
    return QuadResult{cpref * q.value, cpref * q.err_estimate};
}

}  // namespace biorder
