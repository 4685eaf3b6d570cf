#include "biorder/errors.hpp"
#include "biorder/operators.hpp"
#include "biorder/special_functions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace biorder;

namespace {

double sup_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::fabs(x));
    }
    return m;
}

SampledFunction sampled(double start, double end, int n, double (*f)(double))
{
    return SampledFunction::sample(Grid(start, end, n), f);
}

}  // namespace

TEST(Grid, NodesAndValidation)
{
    const Grid g(0.0, 0.3, 3);
    EXPECT_EQ(g.node_count(), 4);
    EXPECT_DOUBLE_EQ(g.step(), 0.1);
    EXPECT_EQ(g.node(3), 0.3);
    EXPECT_EQ(g.nodes().size(), 4u);
    EXPECT_THROW(Grid(1.0, 1.0, 4), GridError);
    EXPECT_THROW(Grid(0.0, 1.0, 0), GridError);
    EXPECT_THROW(g.node(4), IndexError);
}

TEST(SampledFunction, Validation)
{
    const Grid g(0.0, 1.0, 2);
    EXPECT_THROW(SampledFunction(g, {1.0, 2.0}), GridError);
    EXPECT_THROW(SampledFunction(g, {1.0, NAN, 2.0}), DomainError);
    const SampledField f = SampledField::sample(g, Grid(0.0, 2.0, 1),
                                                [](double x, double t) { return x + 10 * t; });
    EXPECT_EQ(f.values.size(), 6u);
    EXPECT_DOUBLE_EQ(f.at(2, 1), 21.0);
    EXPECT_EQ(f.row(1), (std::vector<double>{20.0, 20.5, 21.0}));
    EXPECT_THROW(f.row(2), IndexError);
}

TEST(Delta, CorrectedWeightsTelescope)
{
    const BiOrder o(0.3, 0.7);
    const Grid g(0.0, 1.0, 32);
    for (int n : {1, 7, 32}) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = delta_coefficient(o, g, n, i);
            EXPECT_GT(d, 0.0);
            sum += d;
        }
        EXPECT_NEAR(sum, kernel_primitive(o, g.node(n)).value, 1e-14);
    }
    // Older cells weigh less.
    EXPECT_GT(delta_coefficient(o, g, 32, 31), delta_coefficient(o, g, 32, 0));
    EXPECT_THROW(delta_coefficient(o, g, 0, 0), IndexError);
    EXPECT_THROW(delta_coefficient(o, g, 5, 5), IndexError);
}

TEST(Delta, PaperLiteralDiffersFromCorrected)
{
    const BiOrder o(0.5, 0.5);
    const Grid g(0.0, 1.0, 16);
    const double c = delta_coefficient(o, g, 16, 3);
    const double p = delta_coefficient(o, g, 16, 3, Scheme::paper_literal);
    EXPECT_GT(std::fabs(c - p), 1e-3);
}

TEST(AcLeft, AnnihilatesConstants)
{
    const auto f = sampled(0.0, 1.0, 1024, [](double) { return 5.0; });
    const auto out = ac_derivative_grid(f, BiOrder(0.5, 0.5));
    EXPECT_EQ(sup_abs(out.values), 0.0);
    EXPECT_EQ(out.variant, Variant::ac);
    EXPECT_TRUE(out.warnings.empty());
}

TEST(AcLeft, LinearIsExactAtEveryNode)
{
    // Constant slope: the scheme integrates the kernel exactly.
    const BiOrder o(0.5, 0.5);
    const auto f = sampled(0.0, 1.0, 2048, [](double t) { return t; });
    const auto out = ac_derivative_grid(f, o);
    EXPECT_EQ(out.values.front(), 0.0);
    EXPECT_NEAR(out.values.back(), 1.70031177392400135, 1e-12);
    for (int n : {1, 100, 1000}) {
        EXPECT_NEAR(out.values[static_cast<std::size_t>(n)],
                    o.prefactor() * kernel_primitive(o, f.grid.node(n)).value, 1e-12);
    }
    EXPECT_LT(out.truncation_estimate, 1e-10);
}

TEST(AcLeft, QuadraticConverges)
{
    const BiOrder o(0.5, 0.5);
    const double exact = 2.5121935350411000053;
    double prev = 1.0;
    for (int n : {64, 128, 256, 512}) {
        const auto f = sampled(0.0, 1.0, n, [](double t) { return t * t; });
        const double err = std::fabs(ac_derivative_grid(f, o).values.back() - exact);
        EXPECT_LT(err, prev);
        prev = err;
    }
    EXPECT_LT(prev, 1e-2);
}

TEST(AcLeft, NonzeroStartShiftsTheMemory)
{
    const BiOrder o(0.4, 0.6);
    const auto a = sampled(0.0, 1.0, 64, [](double t) { return t * t; });
    const auto b = sampled(2.0, 3.0, 64, [](double t) { return (t - 2) * (t - 2); });
    const auto va = ac_derivative_grid(a, o).values;
    const auto vb = ac_derivative_grid(b, o).values;
    for (std::size_t i = 0; i < va.size(); ++i) {
        EXPECT_NEAR(va[i], vb[i], 1e-12);
    }
}

TEST(AcLeft, PaperLiteralSchemeIsFlagged)
{
    OperatorOptions opts;
    opts.scheme = Scheme::paper_literal;
    const auto f = sampled(0.0, 1.0, 64, [](double t) { return t; });
    const auto lit = ac_derivative_grid(f, BiOrder(0.5, 0.5), opts);
    EXPECT_EQ(lit.scheme, Scheme::paper_literal);
    EXPECT_FALSE(lit.warnings.empty());
    const auto cor = ac_derivative_grid(f, BiOrder(0.5, 0.5));
    EXPECT_GT(std::fabs(lit.values.back() - cor.values.back()), 1e-2);
}

TEST(ArLeft, ZeroForZeroAndSingularForConstants)
{
    const BiOrder o(0.5, 0.5);
    const auto zero = sampled(0.0, 1.0, 64, [](double) { return 0.0; });
    EXPECT_EQ(sup_abs(ar_derivative_grid(zero, o).values), 0.0);

    // A.R of a constant is the G term alone: f0 C k(t).
    const auto c = sampled(0.0, 1.0, 64, [](double) { return 2.0; });
    const auto v = ar_derivative_grid(c, o).values;
    for (int n : {1, 10, 64}) {
        EXPECT_NEAR(v[static_cast<std::size_t>(n)], g_correction(o, 2.0, c.grid.node(n)), 1e-13);
    }
    // Node 0 holds the first-cell mean of C f0 k.
    EXPECT_NEAR(v[0], 2.0 * o.prefactor() * kernel_primitive(o, c.grid.step()).value /
                          c.grid.step(),
                1e-12);
}

TEST(ArLeft, DifferenceFromAcIsTheGTerm)
{
    const BiOrder o(0.5, 0.5);
    const auto f = sampled(0.0, 1.0, 1024, [](double t) { return std::exp(-t); });
    const auto ac = ac_derivative_grid(f, o).values;
    const auto ar = ar_derivative_grid(f, o).values;
    double worst = 0.0;
    for (int n = 1; n < 1024; ++n) {
        const double g = g_correction(o, 1.0, f.grid.node(n));
        worst = std::max(worst, std::fabs(ac[static_cast<std::size_t>(n)] -
                                          (ar[static_cast<std::size_t>(n)] - g)));
    }
    EXPECT_LT(worst / sup_abs(ar), 1e-2);
}

TEST(GCorrection, LiteralDropsTheRate)
{
    const BiOrder half(0.5, 0.5);  // lambda = 1: both forms agree
    EXPECT_NEAR(g_correction(half, 1.0, 0.7), g_correction(half, 1.0, 0.7, true), 1e-15);
    const BiOrder o(0.3, 0.7);
    EXPECT_GT(std::fabs(g_correction(o, 1.0, 0.7) - g_correction(o, 1.0, 0.7, true)), 1e-2);
    EXPECT_EQ(g_correction(o, 0.0, 0.7), 0.0);
    EXPECT_THROW(g_correction(o, 1.0, 0.0), DomainError);
}

TEST(RightSided, ReflectionOfLeftSided)
{
    const BiOrder o(0.3, 0.7);
    const auto f = sampled(0.0, 2.0, 64, [](double t) { return std::cos(t) + t * t; });
    std::vector<double> mirrored(f.values.rbegin(), f.values.rend());
    const SampledFunction g(f.grid, mirrored);
    for (Variant v : {Variant::ac, Variant::ar}) {
        const auto right = right_sided_derivative(f, o, v).values;
        const auto left = v == Variant::ac ? ac_derivative_grid(g, o).values
                                           : ar_derivative_grid(g, o).values;
        ASSERT_EQ(right.size(), 64u);
        for (int i = 0; i < 64; ++i) {
            EXPECT_NEAR(right[static_cast<std::size_t>(i)], -left[static_cast<std::size_t>(64 - i)],
                        1e-11);
        }
    }
}

TEST(RightSided, HorizonAndTail)
{
    const BiOrder o(0.5, 0.5);
    const auto f = sampled(0.0, 1.0, 16, [](double t) { return std::exp(-t); });
    const auto out = right_sided_derivative(f, o, Variant::ac);
    EXPECT_GT(out.tail_estimate, 0.0);
    EXPECT_FALSE(out.warnings.empty());
    EXPECT_DOUBLE_EQ(right_sided_derivative_at(f, o, Variant::ac, 3), out.values[3]);
    EXPECT_THROW(right_sided_derivative_at(f, o, Variant::ac, 16), HorizonError);
    EXPECT_THROW(right_sided_derivative_at(f, o, Variant::ar, -1), IndexError);
}

TEST(Partial, RowsMatchOneDimensionalOperators)
{
    const BiOrder o(0.6, 0.3);
    const Grid gx(0.0, 1.0, 32);
    const Grid gt(0.0, 1.0, 8);
    const SampledField f =
        SampledField::sample(gx, gt, [](double x, double t) { return std::sin(x + t); });
    const auto row = SampledFunction(gx, f.row(5));
    const auto ac = ac_partial_x(f, o, 5);
    const auto ar = ar_partial_x(f, o, 5);
    EXPECT_EQ(ac, ac_derivative_grid(row, o).values);
    EXPECT_EQ(ar, ar_derivative_grid(row, o).values);
    EXPECT_THROW(ac_partial_x(f, o, 9), IndexError);
}

TEST(Mixed, SeparableFieldFactorizes)
{
    // For f = g(x) h(t) the mixed A.C operator is the product of the 1D ones.
    const BiOrder ox(0.5, 0.5);
    const BiOrder ot(0.3, 0.6);
    const Grid gx(0.0, 1.0, 16);
    const Grid gt(0.0, 2.0, 16);
    const SampledField f = SampledField::sample(gx, gt, [](double x, double t) {
        return (x * x + 1.0) * std::exp(-t);
    });
    const auto mixed = ac_mixed_xt(f, ox, ot);
    const auto dx = ac_derivative_grid(SampledFunction::sample(gx, [](double x) { return x * x + 1.0; }), ox).values;
    const auto dt = ac_derivative_grid(SampledFunction::sample(gt, [](double t) { return std::exp(-t); }), ot).values;
    for (int it = 0; it <= 16; ++it) {
        for (int ix = 0; ix <= 16; ++ix) {
            EXPECT_NEAR(mixed.at(ix, it), dx[static_cast<std::size_t>(ix)] * dt[static_cast<std::size_t>(it)], 1e-12);
        }
    }
}

TEST(Mixed, SummationOrderDoesNotMatter)
{
    const BiOrder ox(0.7, 0.2);
    const BiOrder ot(0.25, 0.5);
    const Grid gx(0.0, 1.0, 24);
    const Grid gt(0.0, 1.5, 20);
    const SampledField f =
        SampledField::sample(gx, gt, [](double x, double t) { return std::cos(3 * x * t) + x; });
    const auto a = ac_mixed_xt(f, ox, ot, EvalOrder::xt);
    const auto b = ac_mixed_xt(f, ox, ot, EvalOrder::tx);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        EXPECT_NEAR(a.values[i], b.values[i], 1e-12);
    }
}

TEST(Mixed, ArOfSeparableFieldFactorizes)
{
    const BiOrder ox(0.5, 0.5);
    const BiOrder ot(0.4, 0.4);
    const Grid gx(0.0, 1.0, 16);
    const Grid gt(0.0, 1.0, 16);
    const SampledField f = SampledField::sample(gx, gt, [](double x, double t) { return (1 + x) * (2 + t); });
    const auto mixed = ar_mixed_xt(f, ox, ot);
    // Four-corner cell means of a product are products of 1D cell means.
    const auto dx = ar_derivative_grid(SampledFunction::sample(gx, [](double x) { return 1 + x; }), ox).values;
    const auto dt = ar_derivative_grid(SampledFunction::sample(gt, [](double t) { return 2 + t; }), ot).values;
    for (int it = 0; it <= 16; ++it) {
        for (int ix = 0; ix <= 16; ++ix) {
            const double expect = dx[static_cast<std::size_t>(ix)] * dt[static_cast<std::size_t>(it)];
            EXPECT_NEAR(mixed.at(ix, it), expect, 1e-12 * std::max(1.0, std::fabs(expect)));
        }
    }
}
