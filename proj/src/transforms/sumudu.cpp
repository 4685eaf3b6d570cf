#include "biorder/errors.hpp"
#include "biorder/oracle.hpp"
#include "biorder/transforms.hpp"

#include <cmath>
#include <string>

namespace biorder {

TransformValue sumudu_numeric(const std::function<double(double)>& g, const TransformQuery& q,
                              double singular_exponent)
{
    q.validate();
    const double u = q.variable;
    auto integrand = [&](double t) {
        return t <= 0.0 && singular_exponent > 0.0 ? 0.0 : std::exp(-t) * g(u * t);
    };
    const QuadResult r =
        adaptive_singular_quad(integrand, 0.0, q.horizon, singular_exponent, q.rel_tol);
    TransformValue out{r.value, r.err_estimate, {}};
    const double tail = std::exp(-q.horizon);
    if (tail > 1e-16) {
        out.warnings.push_back("e^(-horizon) = " + std::to_string(tail) + " exceeds 1e-16");
    }
    return out;
}

SeriesResult sumudu_kernel_series(const BiOrder& order, double u, const SeriesTruncation& trunc,
                                  SumuduMode mode)
{
    if (!(u > 0.0) || !std::isfinite(u)) {
        throw DomainError("sumudu_kernel_series: u must be positive, got " + std::to_string(u));
    }
    const double z = -order.lambda() * std::pow(u, order.sigma());
    const double denom_scale = mode == SumuduMode::corrected ? order.beta() : order.alpha();
    SeriesResult r = wright_2psi1({1.0, 1.0}, {1.0 - order.alpha(), order.sigma()},
                                  {1.0, denom_scale}, z, trunc);
    const double factor = std::pow(u, -order.alpha());
    r.value *= factor;
    r.err_estimate *= factor;
    r.truncation_error *= factor;
    return r;
}

double sumudu_ar(const BiOrder& order, double u, double S_f, const SeriesTruncation& trunc,
                 SumuduMode mode)
{
    const double cpref = order.prefactor();
    if (mode == SumuduMode::paper_literal) {
        return cpref / u * sumudu_kernel_series(order, u, trunc, mode).value;
    }
    if (S_f == 0.0) {
        return 0.0;
    }
    return cpref * S_f * sumudu_kernel_series(order, u, trunc, mode).value;
}

}  // namespace biorder
