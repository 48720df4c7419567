#include "osculate/error.hpp"
#include "osculate/moebius.hpp"
#include "osculate/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace osc;
using std::numbers::pi;

namespace {

MoebiusMap random_map(Rng& rng)
{
    for (;;) {
        const double a = uniform(rng, -2.0, 2.0), b = uniform(rng, -2.0, 2.0);
        const double c = uniform(rng, -2.0, 2.0), d = uniform(rng, -2.0, 2.0);
        if (std::abs(a * d - b * c) > 0.1)
            return {a, b, c, d};
    }
}

// Zeros of P(theta) = g1 - g2 on [sin : cos], counted over one period of RP^1.
int projective_grid_crossings(const MoebiusMap& g1, const MoebiusMap& g2)
{
    const auto [a1, b1, c1, d1] = g1.coeffs();
    const auto [a2, b2, c2, d2] = g2.coeffs();
    auto P = [&](double th) {
        const double u = std::sin(th), w = std::cos(th);
        return (a1 * u + b1 * w) * (c2 * u + d2 * w) - (a2 * u + b2 * w) * (c1 * u + d1 * w);
    };
    const int n = 10000;
    int count = 0;
    double prev = P(0.0);
    for (int i = 1; i <= n; ++i) {
        const double v = P(pi * i / n);
        if ((v > 0.0) != (prev > 0.0))
            ++count;
        prev = v;
    }
    return count;
}

} // namespace

TEST(MoebiusMap, NormalizesDeterminantAndSign)
{
    const MoebiusMap g(-2.0, 1.0, 3.0, 4.0);
    EXPECT_NEAR(std::abs(g.det()), 1.0, 1e-12);
    EXPECT_GT(g.coeffs()[0], 0.0);
    const MoebiusMap h(0.0, -1.0, 1.0, 0.0);
    EXPECT_GT(h.coeffs()[1], 0.0);
    EXPECT_THROW(MoebiusMap(1.0, 2.0, 2.0, 4.0), Error);
}

TEST(MoebiusMap, ComposeAndInverse)
{
    const MoebiusMap g(1.0, 2.0, -1.0, 3.0), h(2.0, 0.5, 1.0, 1.0);
    for (double x : {-0.7, 0.2, 1.9})
        EXPECT_NEAR(g.compose(h)(x), g(h(x)), 1e-12);
    for (double x : {-0.7, 0.2, 1.9})
        EXPECT_NEAR(g.inverse()(g(x)), x, 1e-12);
}

TEST(Schwarzian, VanishesOnMoebiusMaps)
{
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const MoebiusMap g = random_map(rng);
        const SmoothFunction f = g.as_function();
        for (int i = 0; i < 20; ++i) {
            const double x = -3.0 + 0.3 * i;
            const auto& m = g.coeffs();
            if (std::abs(m[2] * x + m[3]) < 0.1)
                continue;
            EXPECT_LT(std::abs(schwarzian(f, x)), 1e-10);
        }
    }
}

TEST(Schwarzian, TangentIsTwo)
{
    const SmoothFunction f = SmoothFunction::elementary(Elementary::Tan);
    for (double x = -1.4; x <= 1.4; x += 0.1)
        EXPECT_NEAR(schwarzian(f, x), 2.0, 1e-9) << x;
}

TEST(Schwarzian, ExponentialIsMinusHalf)
{
    const SmoothFunction f = SmoothFunction::elementary(Elementary::Exp);
    for (double x : {-2.0, 0.0, 1.5})
        EXPECT_NEAR(schwarzian(f, x), -0.5, 1e-12);
}

TEST(Schwarzian, CubeIsMinusFourOverXSquared)
{
    const SmoothFunction f = SmoothFunction::monomial(3);
    for (double x : {0.5, 1.0, 2.0})
        EXPECT_NEAR(schwarzian(f, x), -4.0 / (x * x), 1e-12);
    EXPECT_THROW(schwarzian(f, 0.0), Error);
}

TEST(SchwarzianProperty, InvariantUnderPostComposition)
{
    Rng rng(19);
    const std::vector<SmoothFunction> fs{SmoothFunction::elementary(Elementary::Exp),
                                         SmoothFunction::elementary(Elementary::Sin),
                                         SmoothFunction::polynomial({0.0, 1.0, 0.3, 0.2})};
    for (int trial = 0; trial < 30; ++trial) {
        const SmoothFunction& f = fs[static_cast<std::size_t>(trial) % fs.size()];
        const MoebiusMap g = random_map(rng);
        const auto& m = g.coeffs();
        const SmoothFunction gf = SmoothFunction::fractional_linear_of(m[0], m[1], m[2], m[3], f);
        for (int i = 0; i < 10; ++i) {
            const double x = uniform(rng, -1.0, 1.0);
            if (std::abs(f.derivative(x, 1)) < 0.1 || std::abs(m[2] * f(x) + m[3]) < 0.2)
                continue;
            EXPECT_NEAR(schwarzian(gf, x), schwarzian(f, x), 1e-8 * std::max(1.0, std::abs(schwarzian(f, x))));
        }
    }
}

TEST(OsculatingMoebius, RecoversAMoebiusMap)
{
    const MoebiusMap g(1.0, 2.0, -1.0, 3.0);
    const MoebiusMap o = osculating_moebius(g.as_function(), 0.4);
    for (int i = 0; i < 4; ++i)
        EXPECT_NEAR(o.coeffs()[i], g.coeffs()[i], 1e-12);
}

TEST(OsculatingMoebius, CubeAtOne)
{
    const MoebiusMap g = osculating_moebius(SmoothFunction::monomial(3), 1.0);
    const Jet j = g.jet(1.0, 3);
    EXPECT_NEAR(j.derivative(0), 1.0, 1e-12);
    EXPECT_NEAR(j.derivative(1), 3.0, 1e-12);
    EXPECT_NEAR(j.derivative(2), 6.0, 1e-12);
    EXPECT_GT(std::abs(j.derivative(3) - 6.0), 1.0);
    EXPECT_NEAR(std::abs(g.det()), 1.0, 1e-12);
}

TEST(OsculatingMoebius, HyperosculatesWhereSchwarzianVanishes)
{
    // f = x^3 + x has S = 0 at x^2 = 1/6.
    const SmoothFunction f = SmoothFunction::polynomial({0.0, 1.0, 0.0, 1.0});
    const double t = 1.0 / std::sqrt(6.0);
    EXPECT_NEAR(schwarzian(f, t), 0.0, 1e-12);
    const Jet g = osculating_moebius(f, t).jet(t, 3);
    EXPECT_NEAR(g.derivative(3), f.derivative(t, 3), 1e-9);
}

TEST(OsculatingMoebiusProperty, MatchesTwoJet)
{
    Rng rng(23);
    const std::vector<SmoothFunction> fs{SmoothFunction::elementary(Elementary::Exp),
                                         SmoothFunction::elementary(Elementary::Tan),
                                         SmoothFunction::monomial(3), SmoothFunction::elementary(Elementary::Sin)};
    for (int trial = 0; trial < 100; ++trial) {
        const SmoothFunction& f = fs[static_cast<std::size_t>(trial) % fs.size()];
        const double t = uniform(rng, 0.2, 1.3);
        const Jet fj = f.jet(t, 2);
        const Jet gj = osculating_moebius(f, t).jet(t, 2);
        for (int i = 0; i <= 2; ++i)
            EXPECT_NEAR(gj.derivative(i), fj.derivative(i), 1e-9 * std::max(1.0, std::abs(fj.derivative(i))))
                << f.name() << " t=" << t << " i=" << i;
    }
}

TEST(GraphsDisjoint, Examples)
{
    auto rot = [](double th) { return MoebiusMap(std::cos(th), -std::sin(th), std::sin(th), std::cos(th)); };
    EXPECT_TRUE(moebius_graphs_disjoint(rot(0.3), rot(1.1)));
    EXPECT_FALSE(moebius_graphs_disjoint(MoebiusMap(1, 0, 0, 1), MoebiusMap(2, 0, 0, 0.5)));
    EXPECT_FALSE(moebius_graphs_disjoint(MoebiusMap(1, 1, 0, 1), MoebiusMap(1, 2, 0, 1)));
    try {
        moebius_graphs_disjoint(rot(0.3), rot(0.3 + pi));
        FAIL() << "expected identical-map error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IdenticalMap);
    }
}

TEST(GraphsDisjointProperty, AgreesWithProjectiveGridScan)
{
    Rng rng(99);
    int disjoint = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const MoebiusMap g1 = random_map(rng), g2 = random_map(rng);
        const bool verdict = moebius_graphs_disjoint(g1, g2);
        EXPECT_EQ(verdict, projective_grid_crossings(g1, g2) == 0) << "trial " << trial;
        disjoint += verdict;
    }
    EXPECT_GT(disjoint, 0);
    EXPECT_LT(disjoint, 100);
}

TEST(MoebiusNesting, TangentOnUnitRange)
{
    const NestingReport r = verify_moebius_nesting(SmoothFunction::elementary(Elementary::Tan), {0.1, 1.4}, 30);
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.pair_count(), 435u);
    EXPECT_EQ(r.count(PairRelation::Intersecting), 0u);
    EXPECT_GT(r.worst_margin, 0.0);
}

TEST(MoebiusNesting, CubeOnHalfToTwo)
{
    const NestingReport r = verify_moebius_nesting(SmoothFunction::monomial(3), {0.5, 2.0}, 20);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.metrics.at("schwarzian_sign"), -1.0);
}

TEST(MoebiusNesting, MoebiusFunctionFailsHypothesis)
{
    const NestingReport r = verify_moebius_nesting(MoebiusMap(1, 2, -1, 3).as_function(), {-1.0, 1.0}, 10);
    EXPECT_FALSE(r.hypothesis_holds);
    EXPECT_FALSE(r.passed);
}

TEST(MoebiusNesting, SignChangeIsLocated)
{
    const NestingReport r = verify_moebius_nesting(SmoothFunction::polynomial({0.0, 1.0, 0.0, 1.0}), {0.1, 1.0}, 10);
    EXPECT_FALSE(r.hypothesis_holds);
    ASSERT_TRUE(r.failure.has_value());
    EXPECT_NEAR(r.failure->t, 1.0 / std::sqrt(6.0), 1e-9);
}

TEST(SchwarzianZeros, PerturbedIdentityHasFour)
{
    const CircleDiffeo f({{1, 0.1, 0.0}});
    const SchwarzianZeros z = schwarzian_zero_count(f);
    EXPECT_GE(z.count(), 4);
    EXPECT_EQ(z.count() % 2, 0);
    for (double t : z.zeros)
        EXPECT_NEAR(projective_schwarzian(f, t), 0.0, 1e-10);
}

TEST(SchwarzianZeros, RotationIsDegenerate)
{
    const SchwarzianZeros z = schwarzian_zero_count(CircleDiffeo({}, 0.7));
    EXPECT_TRUE(z.degenerate);
    EXPECT_EQ(z.count(), 0);
}

TEST(SchwarzianZerosProperty, SeededDiffeosHaveEvenCountAtLeastFour)
{
    for (const auto& f : circle_diffeo_batch(6, 100)) {
        const SchwarzianZeros z = schwarzian_zero_count(f, 1024);
        EXPECT_FALSE(z.degenerate);
        EXPECT_GE(z.count(), 4);
        EXPECT_EQ(z.count() % 2, 0);
    }
}

TEST(CircleDiffeo, RejectsNonMonotoneLift)
{
    EXPECT_THROW(CircleDiffeo({{2, 0.6, 0.0}}), Error);
    const CircleDiffeo f({{1, 0.2, 0.3}}, 0.5);
    EXPECT_NEAR(f(2 * pi) - f(0.0), 2 * pi, 1e-12);
}
