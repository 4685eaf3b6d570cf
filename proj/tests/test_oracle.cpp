#include "biorder/errors.hpp"
#include "biorder/oracle.hpp"
#include "biorder/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace biorder;

namespace {

struct SingularCase {
    const char* name;
    double alpha;
    double lo;
    double hi;
    double (*g)(double y, double d, double a);  ///< d = y - lo
    double expect;
};

double power(double, double d, double a) { return std::pow(d, -a); }
double power_exp(double y, double d, double a) { return std::pow(d, -a) * std::exp(-y); }
double power_cos(double y, double d, double a) { return std::pow(d, -a) * std::cos(y); }
double shifted(double y, double d, double a) { return std::pow(d, -a) * std::exp(-y); }

// Reference values to 20 digits (lower incomplete gamma, and 40-digit
// quadrature after the same z^(1/(1-alpha)) substitution).
const SingularCase kCases[] = {
    {"power", 0.1, 0, 1, power, 1.0 / 0.9},
    {"power", 0.25, 0, 1, power, 1.0 / 0.75},
    {"power", 0.5, 0, 1, power, 2.0},
    {"power", 0.75, 0, 1, power, 4.0},
    {"power", 0.9, 0, 1, power, 10.0},
    {"exp", 0.1, 0, 1, power_exp, 0.72174374836734157771},
    {"exp", 0.25, 0, 1, power_exp, 0.90678388890247107806},
    {"exp", 0.5, 0, 1, power_exp, 1.4936482656248540508},
    {"exp", 0.75, 0, 1, power_exp, 3.3793543790284096031},
    {"exp", 0.9, 0, 1, power_exp, 9.2839720283798880023},
    {"cos", 0.1, 0, 2, power_cos, 1.0175957654687840209},
    {"cos", 0.25, 0, 2, power_cos, 1.2343397234476338321},
    {"cos", 0.5, 0, 2, power_cos, 1.8882490336945141522},
    {"cos", 0.75, 0, 2, power_cos, 3.8702678835812718854},
    {"cos", 0.9, 0, 2, power_cos, 9.8564631850702884931},
    {"shift", 0.1, 1, 3, shifted, 0.34830425871995078654},
    {"shift", 0.25, 1, 3, shifted, 0.41246210829893369495},
    {"shift", 0.5, 1, 3, shifted, 0.62238091548596312166},
    {"shift", 0.75, 1, 3, shifted, 1.3107314830450015585},
    {"shift", 0.9, 1, 3, shifted, 3.4799665110215509859},
};

}  // namespace

TEST(SingularQuad, TwentyKnownIntegrals)
{
    for (const SingularCase& c : kCases) {
        const double a = c.alpha;
        const auto g = c.g;
        // The offset form receives y - lo exactly, so lo != 0 loses nothing.
        const QuadResult q =
            c.lo == 0.0
                ? adaptive_singular_quad([&](double y) { return g(y, y, a); }, c.lo, c.hi, a)
                : adaptive_singular_quad_offset([&](double y, double d) { return g(y, d, a); },
                                                c.lo, c.hi, a);
        const double err = std::fabs(q.value - c.expect);
        EXPECT_LE(err / c.expect, 1e-10) << c.name << " alpha=" << a;
        EXPECT_GE(q.err_estimate, err) << c.name << " alpha=" << a;
    }
}

TEST(SingularQuad, ErfIdentity)
{
    const QuadResult q = adaptive_singular_quad(
        [](double y) { return std::exp(-y) / std::sqrt(y); }, 0.0, 1.0, 0.5);
    EXPECT_NEAR(q.value, std::sqrt(std::numbers::pi) * std::erf(1.0), 1e-13);
}

TEST(SingularQuad, MatchesKernelPrimitive)
{
    const BiOrder o(0.5, 0.5);
    const QuadResult q =
        adaptive_singular_quad([&](double y) { return kernel_value(o, y); }, 0.0, 1.0, 0.5);
    EXPECT_NEAR(q.value, kernel_primitive(o, 1.0).value, 1e-12);
    EXPECT_NEAR(q.value, 1.5068620757157927, 1e-12);
}

TEST(SingularQuad, RejectsBadInputAndReportsNonconvergence)
{
    auto one = [](double) { return 1.0; };
    EXPECT_THROW(adaptive_singular_quad(one, 1.0, 0.0, 0.5), DomainError);
    EXPECT_THROW(adaptive_singular_quad(one, 0.0, 1.0, 1.0), DomainError);
    // A non-integrable jump cascade cannot meet 1e-15 within the budget.
    auto wild = [](double y) { return std::sin(1.0 / (y + 1e-6)); };
    EXPECT_THROW(adaptive_singular_quad(wild, 0.0, 1.0, 0.0, 1e-15), NonconvergenceError);
}

TEST(TanhSinh, AgreesWithSingularQuad)
{
    for (double a : {0.1, 0.5, 0.9}) {
        auto g = [a](double y) { return power_cos(y, y, a); };
        const QuadResult t = tanh_sinh_quad(g, 0.0, 2.0);
        const QuadResult s = adaptive_singular_quad(g, 0.0, 2.0, a);
        EXPECT_LE(std::fabs(t.value - s.value) / s.value, 1e-10) << a;
    }
}

TEST(MittagLefflerIntegral, MatchesClosedForms)
{
    for (double x : {0.5, 1.0, 3.0, 10.0}) {
        const QuadResult q = mittag_leffler_by_integral(0.5, 1.0, x);
        EXPECT_NEAR(q.value, std::exp(x * x) * std::erfc(x), 1e-13) << x;
    }
    // Raised gam goes through the recurrence: E_{1/2,3/2}(-x) at x = 2.
    const QuadResult r = mittag_leffler_by_integral(0.5, 1.5, 2.0);
    EXPECT_NEAR(r.value, mittag_leffler(0.5, 1.5, -2.0), 1e-13);
    EXPECT_NEAR(mittag_leffler_by_integral(0.1, 1.0, 0.5).value, 0.65432446028800192845, 1e-13);
    EXPECT_NEAR(mittag_leffler_by_integral(0.6, 1.4, 30.0).value, 0.028379276490864633577, 1e-14);
    EXPECT_THROW(mittag_leffler_by_integral(1.0, 1.0, 1.0), DomainError);
}

TEST(TestFunction, ValuesDerivativesNames)
{
    const TestFunction m = TestFunction::monomial(3);
    EXPECT_DOUBLE_EQ(m.value(2.0), 8.0);
    EXPECT_DOUBLE_EQ(m.derivative(2.0), 12.0);
    EXPECT_EQ(m.name(), "monomial:3");
    EXPECT_EQ(TestFunction::constant(5).name(), "const:5");
    EXPECT_EQ(TestFunction::constant(5).derivative(1.0), 0.0);
    EXPECT_NEAR(TestFunction::exponential(-1).derivative(1.0), -std::exp(-1.0), 1e-16);
    EXPECT_NEAR(TestFunction::sine(2).derivative(1.0), 2.0 * std::cos(2.0), 1e-15);
    EXPECT_EQ(TestFunction::sine(2).name(), "sine:2");
    EXPECT_THROW(TestFunction::monomial(-1), DomainError);
}

TEST(ClosedForm, LinearEqualsScaledPrimitive)
{
    const BiOrder o(0.5, 0.5);
    const SeriesResult r = ac_closed_form(TestFunction::monomial(1), o, 1.0);
    EXPECT_NEAR(r.value, 1.70031177392400135, 1e-14);
    EXPECT_NEAR(r.value, o.prefactor() * kernel_primitive(o, 1.0).value, 1e-14);
    EXPECT_EQ(ac_closed_form(TestFunction::constant(5), o, 1.0).value, 0.0);
    // Leading behaviour C t^(1-alpha) / (1-alpha) as t -> 0.
    const double t = 1e-10;
    EXPECT_NEAR(ac_closed_form(TestFunction::monomial(1), o, t).value /
                    (o.prefactor() * std::sqrt(t) / 0.5),
                1.0, 1e-4);
}

TEST(ClosedForm, DualDerivationAcrossInterval)
{
    SeriesTruncation trunc;
    trunc.max_terms = 20000;
    for (auto [a, b] : {std::pair{0.3, 0.7}, {0.5, 0.5}, {0.8, 0.2}, {0.1, 0.1}, {0.9, 0.9}}) {
        const BiOrder o(a, b);
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.1 * i;
            const double cf = ac_closed_form(TestFunction::monomial(1), o, t, trunc).value;
            const double p = o.prefactor() * kernel_primitive(o, t, trunc).value;
            EXPECT_LE(std::fabs(cf - p) / p, 1e-9) << a << " " << b << " " << t;
        }
    }
}

TEST(ClosedForm, QuadraticMatchesQuadrature)
{
    const BiOrder o(0.5, 0.5);
    const double cf = ac_closed_form(TestFunction::monomial(2), o, 1.0).value;
    EXPECT_NEAR(cf, 2.5121935350411000053, 1e-13);
    EXPECT_NEAR(ac_by_quadrature(TestFunction::monomial(2), o, 1.0).value, cf, 1e-10);
    EXPECT_THROW(ac_closed_form(TestFunction::sine(1), o, 1.0), UnsupportedKind);
}

TEST(QuadratureDerivative, ExponentialAndSine)
{
    const BiOrder o(0.5, 0.5);
    EXPECT_NEAR(ac_by_quadrature(TestFunction::exponential(-1), o, 1.0).value,
                -0.84537953382245776162, 1e-11);
    EXPECT_NEAR(ac_by_quadrature(TestFunction::sine(2), o, 1.0).value, 0.18862354673426998548,
                1e-11);
    // Shifting the lower terminal shortens the memory.
    EXPECT_NEAR(ac_by_quadrature(TestFunction::monomial(1), o, 1.5, 0.5).value,
                o.prefactor() * kernel_primitive(o, 1.0).value, 1e-11);
}
