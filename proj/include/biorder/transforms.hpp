#pragma once

#include "biorder/grid.hpp"
#include "biorder/operators.hpp"
#include "biorder/series.hpp"
#include "biorder/special_functions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace biorder {

/// Evaluation point of a Laplace (s) or Sumudu (u) transform.
struct TransformQuery {
    double variable = 1.0;  ///< s or u, > 0
    double horizon = 40.0;  ///< the time integral is cut at this point
    SeriesTruncation trunc{};
    double rel_tol = 1e-12;  ///< quadrature tolerance

    /// Horizon chosen so that e^(-s horizon) is about 4e-18.
    static TransformQuery laplace(double s);
    /// Horizon 40 for the e^(-t) weight of the Sumudu integral.
    static TransformQuery sumudu(double u);

    void validate() const;
};

struct TransformValue {
    double value = 0.0;
    double err_estimate = 0.0;
    std::vector<std::string> warnings;
};

/// int_0^horizon e^(-s t) f(t) dt by adaptive Gauss-Kronrod quadrature.
/// `singular_exponent` declares f ~ t^(-a) at t = 0.
TransformValue laplace_numeric(const std::function<double(double)>& f, const TransformQuery& q,
                               double singular_exponent = 0.0);

/// Same integral with tanh-sinh quadrature: an independent second rule.
TransformValue laplace_numeric_tanh_sinh(const std::function<double(double)>& f,
                                         const TransformQuery& q);

/// Laplace transform of grid samples over [start, end] of their grid (the
/// horizon of q is ignored). t^a f is interpolated piecewise linearly, with
/// node 0 extrapolated from nodes 1 and 2 when a > 0, and each cell is
/// integrated exactly up to Gauss-Legendre rounding. The error estimate is
/// the Richardson difference against the every-other-node interpolant.
TransformValue laplace_numeric(const SampledFunction& f, const TransformQuery& q,
                               double singular_exponent = 0.0);

/// K(s) = L{t^-alpha E_beta(-lambda t^sigma)}(s)
///      = s^(alpha-1) 2Psi1[(1,1),(1-alpha,sigma); (1,beta); -lambda s^-sigma].
/// Divergent in general; use smallest_term truncation.
SeriesResult laplace_kernel_series(const BiOrder& order, double s, const SeriesTruncation& trunc);

/// The same expansion summed term by term without the Wright layer:
///   sum_j (-lambda)^j Gamma(1-alpha+sigma j) / Gamma(beta j + 1) s^-(1-alpha+sigma j).
SeriesResult laplace_kernel_series_direct(const BiOrder& order, double s,
                                          const SeriesTruncation& trunc);

enum class LaplaceArForm {
    factorized,  ///< C s K(s) F(s)
    printed,     ///< C s^alpha 2Psi1[(1,1),(1,sigma); (1,beta); -lambda s^-sigma], no F(s)
};

/// Laplace transform of the A.R derivative from F(s) = L{f}(s).
double laplace_ar_product(const BiOrder& order, double s, double F_of_s,
                          const SeriesTruncation& trunc,
                          LaplaceArForm form = LaplaceArForm::factorized);

struct Theorem2Residual {
    double residual = 0.0;  ///< L{AC} - (L{AR} - L{G})
    double laplace_ac = 0.0;
    double laplace_ar = 0.0;
    double laplace_g = 0.0;
};

/// Laplace-domain check of AC = AR - G: all three transforms are taken
/// numerically from the grid operators' outputs on f's grid.
Theorem2Residual theorem2_transform_check(const BiOrder& order, const SampledFunction& f,
                                          double s, const OperatorOptions& opts = {});

enum class SumuduMode {
    corrected,      ///< Gamma(beta j + 1) in the denominators
    paper_literal,  ///< Gamma(alpha j + 1), as printed
};

/// S(g)(u) = int_0^horizon e^-t g(u t) dt by adaptive quadrature.
TransformValue sumudu_numeric(const std::function<double(double)>& g, const TransformQuery& q,
                              double singular_exponent = 0.0);

/// Sumudu transform of the kernel,
///   u^-alpha sum_j (-lambda u^sigma)^j Gamma(sigma j - alpha + 1) / Gamma(beta j + 1),
/// truncated according to trunc (smallest_term for the divergent expansion).
SeriesResult sumudu_kernel_series(const BiOrder& order, double u, const SeriesTruncation& trunc,
                                  SumuduMode mode = SumuduMode::corrected);

/// Sumudu transform of the A.R derivative from S_f = S(f)(u).
///
/// Corrected: C S_f S(k)(u). The Sumudu convolution rule contributes a
/// factor u that cancels the 1/u of the outer derivative. paper_literal
/// returns the printed C u^(-1) S(k)(u) with Gamma(alpha j + 1) and no S_f.
double sumudu_ar(const BiOrder& order, double u, double S_f, const SeriesTruncation& trunc,
                 SumuduMode mode = SumuduMode::corrected);

}  // namespace biorder
