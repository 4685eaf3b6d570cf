#pragma once

#include "biorder/series.hpp"

namespace biorder {

/// The order pair (alpha, beta) of the bi-order derivative.
///
/// The kernel of every operator is y^(-alpha) * E_beta(-lambda * y^sigma)
/// with lambda = beta / (1 - beta) and sigma = alpha + beta. The
/// normalization A(beta) is a pure scale factor; it defaults to 1, the
/// conventional choice satisfying A(0) = A(1) = 1.
class BiOrder {
public:
    BiOrder(double alpha, double beta, double a_of_beta = 1.0);

    /// Replaces the derived rate lambda. Diagnostic use only: it breaks the
    /// lambda = beta / (1 - beta) link and exists so that the pure power-law
    /// limit (lambda = 0) can be exercised.
    static BiOrder with_rate_override(double alpha, double beta, double lambda,
                                      double a_of_beta = 1.0);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double a_of_beta() const { return a_of_beta_; }
    double lambda() const { return lambda_; }
    double sigma() const { return alpha_ + beta_; }
    bool rate_overridden() const { return rate_overridden_; }

    /// C = A(beta) / ((1 - beta) * Gamma(1 - alpha)).
    double prefactor() const;

    BiOrder with_a_of_beta(double a) const;

private:
    double alpha_;
    double beta_;
    double a_of_beta_;
    double lambda_;
    bool rate_overridden_ = false;
};

/// Gamma function. Throws PoleError at nonpositive integers and
/// OverflowError when the result is not representable.
double gamma(double x);

/// 1 / Gamma(x); exactly 0 at the poles of Gamma.
double rgamma(double x);

/// d/dx [1 / Gamma(x)], finite everywhere (equals (-1)^n n! at x = -n).
double rgamma_derivative(double x);

enum class MittagLefflerMethod { zero, power_series, asymptotic };

struct MittagLefflerEval {
    double value = 0.0;
    double err_estimate = 0.0;
    MittagLefflerMethod method = MittagLefflerMethod::zero;
    bool extended_precision = false;  ///< series summed in 113-bit arithmetic
    bool accuracy_warning = false;    ///< neither branch reached 1e-10
};

/// Two-parameter Mittag-Leffler function E_{beta,gam}(z) for real z.
///
/// Power series (long double, promoted to 113-bit floats when cancellation
/// demands it) near the origin; on the negative axis with beta < 1 the
/// algebraic asymptotic expansion takes over as soon as its optimally
/// truncated remainder is below double-precision resolution.
MittagLefflerEval mittag_leffler_eval(double beta, double gam, double z);

double mittag_leffler(double beta, double gam, double z);

/// Agreement of the two evaluation branches at the crossover point.
struct SeamReport {
    double crossover = 0.0;  ///< |z| where the asymptotic branch takes over
    double series_value = 0.0;
    double asymptotic_value = 0.0;
    double relative_gap = 0.0;
};

/// Locates the crossover for (beta, gam) and evaluates both branches
/// there. Requires 0 < beta < 1.
SeamReport mittag_leffler_seam(double beta, double gam);

/// Bi-order kernel y^(-alpha) * E_beta(-lambda * y^sigma), y > 0.
double kernel_value(const BiOrder& order, double y);

/// Exact primitive P(y) = integral of the kernel over [0, y].
///
/// Term-wise integration of the Mittag-Leffler series for moderate
/// arguments; for large lambda * y^sigma a residue expansion
/// P(inf-constant) + algebraic tail is used instead.
SeriesResult kernel_primitive(const BiOrder& order, double y,
                              const SeriesTruncation& trunc = {});

/// y^(1-alpha) * E_{beta,2}(-lambda * y^sigma). Not the primitive of the
/// kernel except in special cases; kept for comparison.
double kernel_primitive_paper_literal(const BiOrder& order, double y);

/// A (a, A) parameter pair of a Wright function: Gamma(a + A r).
struct WrightPair {
    double a;
    double scale;
};

/// Wright generalized hypergeometric 2Psi1:
///   sum_r Gamma(a1 + A1 r) Gamma(a2 + A2 r) / Gamma(b1 + B1 r) * z^r / r!
///
/// Divergent parameter sets (B1 - A1 - A2 < -1) are only summed in
/// smallest_term mode, where converged is reported false.
SeriesResult wright_2psi1(WrightPair a1, WrightPair a2, WrightPair b1, double z,
                          const SeriesTruncation& trunc);

}  // namespace biorder
