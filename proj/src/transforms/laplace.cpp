#include "biorder/errors.hpp"
#include "biorder/oracle.hpp"
#include "biorder/transforms.hpp"
#include "special/xprec.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <limits>
#include <algorithm>
#include <string>
#include <vector>

namespace biorder {

namespace {

constexpr double kHorizonDecay = 40.0;  // e^-40 ~ 4e-18
constexpr double kHorizonWarning = 1e-16;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite, got " +
                          std::to_string(v));
    }
}

void horizon_warning(const TransformQuery& q, TransformValue& out)
{
    const double tail = std::exp(-q.variable * q.horizon);
    if (tail > kHorizonWarning) {
        out.warnings.push_back("e^(-s horizon) = " + std::to_string(tail) +
                               " exceeds 1e-16; the truncated tail may matter");
    }
}

SeriesResult scaled(SeriesResult r, double factor)
{
    r.value *= factor;
    r.err_estimate *= std::fabs(factor);
    r.truncation_error *= std::fabs(factor);
    return r;
}

// Integral of e^(-s t) t^-a (g0 + (g1 - g0)(t - t0) / (t1 - t0)) over [t0, t1].
double cell_integral(double s, double a, double t0, double t1, double g0, double g1)
{
    using boost::math::quadrature::gauss;
    const double h = t1 - t0;
    auto lin = [&](double t) { return g0 + (g1 - g0) * (t - t0) / h; };
    if (a > 0.0 && t0 == 0.0) {
        // t = z^p with p = 1 / (1 - a) absorbs the t^-a factor.
        const double p = 1.0 / (1.0 - a);
        auto f = [&](double z) {
            const double t = std::pow(z, p);
            return p * std::exp(-s * t) * lin(t);
        };
        return gauss<double, 30>::integrate(f, 0.0, std::pow(h, 1.0 - a));
    }
    auto f = [&](double t) {
        const double w = a > 0.0 ? std::pow(t, -a) : 1.0;
        return std::exp(-s * t) * w * lin(t);
    };
    return gauss<double, 10>::integrate(f, t0, t1);
}

// Sum of cell integrals over the nodes idx[0], idx[1], ...
double sampled_sum(const std::vector<double>& t, const std::vector<double>& g,
                   const std::vector<int>& idx, double s, double a)
{
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const auto i = static_cast<std::size_t>(idx[k]);
        const auto j = static_cast<std::size_t>(idx[k + 1]);
        acc += cell_integral(s, a, t[i], t[j], g[i], g[j]);
    }
    return acc;
}

}  // namespace

TransformQuery TransformQuery::laplace(double s)
{
    require_positive(s, "Laplace variable");
    TransformQuery q;
    q.variable = s;
    q.horizon = kHorizonDecay / s;
    return q;
}

TransformQuery TransformQuery::sumudu(double u)
{
    require_positive(u, "Sumudu variable");
    TransformQuery q;
    q.variable = u;
    q.horizon = kHorizonDecay;
    return q;
}

void TransformQuery::validate() const
{
    require_positive(variable, "transform variable");
    require_positive(horizon, "transform horizon");
    require_positive(rel_tol, "transform tolerance");
    trunc.validate();
}

TransformValue laplace_numeric(const std::function<double(double)>& f, const TransformQuery& q,
                               double singular_exponent)
{
    q.validate();
    const double s = q.variable;
    auto integrand = [&](double t) { return t <= 0.0 && singular_exponent > 0.0 ? 0.0 : std::exp(-s * t) * f(t); };
    const QuadResult r = adaptive_singular_quad(integrand, 0.0, q.horizon, singular_exponent, q.rel_tol);
    TransformValue out{r.value, r.err_estimate, {}};
    horizon_warning(q, out);
    return out;
}

TransformValue laplace_numeric_tanh_sinh(const std::function<double(double)>& f,
                                         const TransformQuery& q)
{
    q.validate();
    const double s = q.variable;
    auto integrand = [&](double t) { return std::exp(-s * t) * f(t); };
    const QuadResult r = tanh_sinh_quad(integrand, 0.0, q.horizon, q.rel_tol);
    TransformValue out{r.value, r.err_estimate, {}};
    horizon_warning(q, out);
    return out;
}

TransformValue laplace_numeric(const SampledFunction& f, const TransformQuery& q,
                               double singular_exponent)
{
    q.validate();
    const Grid& grid = f.grid;
    if (grid.start() < 0.0) {
        throw GridError("laplace_numeric: samples must lie in t >= 0");
    }
    if (!(singular_exponent >= 0.0 && singular_exponent < 1.0)) {
        throw DomainError("laplace_numeric: singular exponent must lie in [0, 1)");
    }
    const bool singular = singular_exponent > 0.0 && grid.start() == 0.0;
    if (singular && grid.n_intervals() < 2) {
        throw GridError("laplace_numeric: singular samples need at least two intervals");
    }
    const auto t = grid.nodes();
    std::vector<double> g(f.values);
    if (singular_exponent > 0.0) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = t[i] > 0.0 ? std::pow(t[i], singular_exponent) * f.values[i] : 0.0;
        }
        if (singular) {
            g[0] = 2.0 * g[1] - g[2];
        }
    }
    const int n = grid.n_intervals();
    std::vector<int> fine(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        fine[static_cast<std::size_t>(i)] = i;
    }
    std::vector<int> coarse;
    for (int i = 0; i <= n; i += 2) {
        coarse.push_back(i);
    }
    if (coarse.back() != n) {
        coarse.push_back(n);
    }
    const double s = q.variable;
    const double fine_value = sampled_sum(t, g, fine, s, singular_exponent);
    const double coarse_value = sampled_sum(t, g, coarse, s, singular_exponent);
    TransformValue out;
    out.value = fine_value;
    out.err_estimate = std::fabs(fine_value - coarse_value) / 3.0;
    const double tail = std::exp(-s * grid.end());
    if (tail > kHorizonWarning) {
        out.warnings.push_back("samples end at t = " + std::to_string(grid.end()) +
                               " where e^(-s t) = " + std::to_string(tail));
    }
    return out;
}

SeriesResult laplace_kernel_series(const BiOrder& order, double s, const SeriesTruncation& trunc)
{
    require_positive(s, "Laplace variable");
    const double z = -order.lambda() * std::pow(s, -order.sigma());
    const SeriesResult psi =
        wright_2psi1({1.0, 1.0}, {1.0 - order.alpha(), order.sigma()}, {1.0, order.beta()}, z, trunc);
    return scaled(psi, std::pow(s, order.alpha() - 1.0));
}

SeriesResult laplace_kernel_series_direct(const BiOrder& order, double s,
                                          const SeriesTruncation& trunc)
{
    require_positive(s, "Laplace variable");
    trunc.validate();
    const double eps = std::numeric_limits<double>::epsilon();
    const double c = 1.0 - order.alpha();
    const double log_s = std::log(s);
    const bool rate_zero = order.lambda() == 0.0;
    const double log_rate = rate_zero ? 0.0 : std::log(order.lambda());
    const bool smallest = trunc.mode == TruncationMode::smallest_term;

    struct Term {
        double mag;
        double scale;
    };
    auto term = [&](int j) {
        const double e = c + order.sigma() * j;
        int sign = 0;
        const double lg_num = detail::lgamma_abs(e, &sign);
        const double lg_den = detail::lgamma_abs(order.beta() * j + 1.0, &sign);
        const double lz = j * log_rate - e * log_s;
        return Term{std::exp(lg_num - lg_den + lz),
                    std::fabs(lg_num) + std::fabs(lg_den) + std::fabs(lz)};
    };

    SeriesResult out;
    long double sum = 0.0L;
    double rounding = 0.0;
    int argmin = -1;
    double min_mag = std::numeric_limits<double>::infinity();
    int above_min = 0;
    int j = 0;
    bool floor_hit = false;
    const int limit = rate_zero ? 1 : trunc.max_terms;
    std::vector<Term> kept;
    for (; j < limit; ++j) {
        const Term t = term(j);
        if (j > 0 && t.mag <= std::max(trunc.abs_floor, 0x1p-60 * std::fabs(static_cast<double>(sum)))) {
            floor_hit = true;
            break;
        }
        if (smallest) {
            if (t.mag < min_mag) {
                min_mag = t.mag;
                argmin = j;
                above_min = 0;
            } else if (++above_min >= 4) {
                break;
            }
        }
        kept.push_back(t);
        sum += (j % 2 == 0) ? t.mag : -t.mag;
    }
    int cut = j;
    if (rate_zero) {
        floor_hit = true;
    } else if (!floor_hit) {
        if (!smallest) {
            throw TruncationBudgetExceeded("laplace_kernel_series_direct: no convergence within " +
                                           std::to_string(trunc.max_terms) + " terms");
        }
        const double next = term(j).mag;
        if (argmin >= 0 && min_mag < next) {
            cut = argmin;
        }
    }
    sum = 0.0L;
    for (int r = 0; r < cut; ++r) {
        const Term& t = kept[static_cast<std::size_t>(r)];
        sum += (r % 2 == 0) ? t.mag : -t.mag;
        rounding += t.mag * eps * (t.scale + 8.0);
    }
    out.value = static_cast<double>(sum);
    out.truncation_error = rate_zero ? 0.0 : term(cut).mag;
    out.err_estimate = out.truncation_error + rounding + eps * std::fabs(out.value);
    out.terms = cut;
    out.converged = floor_hit;
    return out;
}

double laplace_ar_product(const BiOrder& order, double s, double F_of_s,
                          const SeriesTruncation& trunc, LaplaceArForm form)
{
    require_positive(s, "Laplace variable");
    const double cpref = order.prefactor();
    if (form == LaplaceArForm::printed) {
        const double z = -order.lambda() * std::pow(s, -order.sigma());
        const SeriesResult psi =
            wright_2psi1({1.0, 1.0}, {1.0, order.sigma()}, {1.0, order.beta()}, z, trunc);
        return cpref * std::pow(s, order.alpha()) * psi.value;
    }
    if (F_of_s == 0.0) {
        return 0.0;
    }
    return cpref * s * laplace_kernel_series(order, s, trunc).value * F_of_s;
}

}  // namespace biorder
