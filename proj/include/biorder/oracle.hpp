#pragma once

// Reference computations used to validate the operators and transforms.
// Nothing here depends on the grid operators.

#include "biorder/series.hpp"
#include "biorder/special_functions.hpp"

#include <functional>
#include <string>

namespace biorder {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

/// Integral of g over [lo, hi] where g may behave like (y - lo)^(-alpha).
///
/// The half-interval next to lo is mapped through y = lo + z^(1/(1-alpha)),
/// which removes the singularity, and both halves are integrated with
/// adaptive 31-point Gauss-Kronrod panels. Throws NonconvergenceError when
/// the relative tolerance is not met within the panel budget.
QuadResult adaptive_singular_quad(const std::function<double(double)>& g, double lo, double hi,
                                  double alpha, double tol = 1e-10);

/// As above with g(y, y - lo): the offset is passed exactly, which keeps
/// full accuracy when lo != 0 and y - lo is below the resolution of lo.
QuadResult adaptive_singular_quad_offset(const std::function<double(double, double)>& g, double lo,
                                         double hi, double alpha, double tol = 1e-10);

/// Same integral by double-exponential (tanh-sinh) quadrature, which copes
/// with endpoint singularities without being told their exponent.
QuadResult tanh_sinh_quad(const std::function<double(double)>& g, double lo, double hi,
                          double tol = 1e-12);

/// E_{beta,gam}(-x) for 0 < beta < 1, x > 0 from its real-line integral
/// representation (used for gam <= 1 + beta / 2; larger gam is lowered with
/// E_{b,g}(z) = (E_{b,g-b}(z) - 1/Gamma(g-b)) / z).
QuadResult mittag_leffler_by_integral(double beta, double gam, double x);

enum class TestKind { constant, monomial, exponential, sine };

/// Analytic test function: c, t^k, e^(c t) or sin(w t).
struct TestFunction {
    TestKind kind = TestKind::constant;
    double param = 0.0;  ///< constant value, degree k, rate c or frequency w

    static TestFunction constant(double c);
    static TestFunction monomial(int k);
    static TestFunction exponential(double c);
    static TestFunction sine(double w);

    double value(double t) const;
    double derivative(double t) const;
    std::string name() const;
};

/// A.C derivative of a monomial or constant at t by term-wise integration:
///   C k sum_j (-lambda)^j / Gamma(beta j + 1) B(k, 1 - alpha + sigma j) t^(k - alpha + sigma j)
/// summed in 113-bit arithmetic. UnsupportedKind for other kinds.
SeriesResult ac_closed_form(const TestFunction& tf, const BiOrder& order, double t,
                            const SeriesTruncation& trunc = {});

/// A.C derivative of any test function on [a, t] by singular quadrature of
/// f'(t - y) k(y) over y in [0, t - a].
QuadResult ac_by_quadrature(const TestFunction& tf, const BiOrder& order, double t,
                            double a = 0.0, double tol = 1e-10);

}  // namespace biorder
