#include "osculate/conic.hpp"
#include "osculate/error.hpp"
#include "osculate/fit.hpp"
#include "osculate/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace osc;
using std::numbers::pi;

namespace {

double max_dev(const Conic& a, const Conic& b)
{
    double d = 0.0;
    for (int i = 0; i < 6; ++i)
        d = std::max(d, std::abs(a.coeffs()[i] - b.coeffs()[i]));
    return d;
}

// Random ellipse through a center, semi-axes and rotation.
Conic random_ellipse(Rng& rng, Point& c, double& ax, double& bx, double& th)
{
    c = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    ax = uniform(rng, 0.3, 2.0);
    bx = uniform(rng, 0.3, 2.0);
    th = uniform(rng, 0.0, pi);
    const double cs = std::cos(th), sn = std::sin(th);
    // ((x - c) R)^2 / ax^2 + ... - 1 expanded.
    const double A = cs * cs / (ax * ax) + sn * sn / (bx * bx);
    const double B = 2.0 * cs * sn * (1.0 / (ax * ax) - 1.0 / (bx * bx));
    const double C = sn * sn / (ax * ax) + cs * cs / (bx * bx);
    const double D = -2.0 * A * c.x - B * c.y;
    const double E = -2.0 * C * c.y - B * c.x;
    const double F = A * c.x * c.x + B * c.x * c.y + C * c.y * c.y - 1.0;
    return Conic(A, B, C, D, E, F);
}

// Transverse crossings of conic 2 with the parametric ellipse of conic 1.
int parametric_crossings(const Conic& other, Point c, double ax, double bx, double th)
{
    const int n = 200000;
    const double cs = std::cos(th), sn = std::sin(th);
    auto at = [&](double s) {
        const double u = ax * std::cos(s), v = bx * std::sin(s);
        return other(Point{c.x + u * cs - v * sn, c.y + u * sn + v * cs});
    };
    int count = 0;
    double prev = at(0.0);
    for (int i = 1; i <= n; ++i) {
        const double v = at(2 * pi * i / n);
        if ((v > 0.0) != (prev > 0.0))
            ++count;
        prev = v;
    }
    return count;
}

} // namespace

TEST(Conic, NormalizesToUnitFrobenius)
{
    const Conic k(3.0, 1.0, 2.0, -4.0, 0.5, 7.0);
    const auto m = k.matrix();
    double f = 0.0;
    for (const auto& row : m)
        for (double v : row)
            f += v * v;
    EXPECT_NEAR(std::sqrt(f), 1.0, 1e-12);
    EXPECT_TRUE(Conic(0.0, 1.0, 0.0, 0.0, 0.0, 0.0).degenerate());
    EXPECT_FALSE(Conic(1.0, 0.0, 1.0, 0.0, 0.0, -1.0).degenerate());
    EXPECT_EQ(Conic(1.0, 0.0, 1.0, 0.0, 0.0, -1.0).type(), ConicType::Ellipse);
    EXPECT_EQ(Conic(0.0, 1.0, 0.0, 0.0, 0.0, -2.0).type(), ConicType::Hyperbola);
    EXPECT_EQ(Conic(1.0, 0.0, 0.0, 0.0, -1.0, 0.0).type(), ConicType::Parabola);
}

TEST(OsculatingConic, EllipseIsItsOwn)
{
    const Conic own(0.25, 0.0, 1.0, 0.0, 0.0, -1.0);
    const PlaneCurve e = PlaneCurve::ellipse(2.0, 1.0);
    for (int i = 0; i < 24; ++i)
        EXPECT_LT(max_dev(osculating_conic(e, 2 * pi * i / 24), own), 1e-9) << i;
}

TEST(OsculatingConic, ParabolaGraphIsItsOwn)
{
    const Conic k = osculating_conic(PlaneCurve::polynomial_graph({0, 0, 1}, {-1.0, 1.0}), 0.0);
    // Concave side is above the graph, so F = x^2 - y.
    EXPECT_LT(max_dev(k, Conic(1.0, 0.0, 0.0, 0.0, -1.0, 0.0)), 1e-12);
}

TEST(OsculatingConic, SpiralMatchesFourJetButNotFive)
{
    const PlaneCurve sp = PlaneCurve::log_spiral(0.2, {0.0, 2 * pi});
    const Conic k = osculating_conic(sp, 0.0);
    const CurveJet2 j = sp.jet(0.0, 5);
    const Jet g = k.implicit().compose(j.x, j.y);
    for (int i = 0; i < 5; ++i)
        EXPECT_NEAR(g[i], 0.0, 1e-12);
    EXPECT_GT(std::abs(g[5]), 1e-4);
    EXPECT_EQ(g[5], sextactic_function(sp, 0.0));
}

TEST(OsculatingConic, FlatPointThrows)
{
    const PlaneCurve cubic = PlaneCurve::polynomial_graph({0, 0, 0, 1}, {-1.0, 1.0});
    EXPECT_THROW(osculating_conic(cubic, 0.0), Error);
}

TEST(OsculatingConicProperty, JetContactAndSignConvention)
{
    const auto ovals = fourier_oval_batch(5, 6);
    Rng rng(17);
    for (const auto& o : ovals)
        for (int k = 0; k < 10; ++k) {
            const double t = uniform(rng, 0.0, 2 * pi);
            const OsculatingFit fit = osculating_fit(o, t, 2);
            const Conic conic(fit.poly);
            const CurveJet2 j = o.jet(t, 5);
            const std::vector<Jet> mono = monomial_jets(2, j.x, j.y);
            double scale = 0.0;
            for (std::size_t m = 0; m < mono.size(); ++m)
                scale += std::abs(fit.poly.coeffs()[m]) * mono[m].norm_inf();
            const Jet g = fit.poly.compose(j.x, j.y);
            for (int i = 0; i < 5; ++i)
                EXPECT_LE(std::abs(g[i]), 1e-9 * scale) << "t=" << t << " i=" << i;
            EXPECT_EQ(g[5], sextactic_function(o, t));
            EXPECT_LT(conic(fit.probe), 0.0);
            EXPECT_NEAR(std::abs(conic.coeffs()[0] - fit.poly.coeffs()[3]), 0.0, 1e-12);
        }
}

TEST(Sextactic, EllipseVanishesEverywhere)
{
    for (double a : {1.5, 2.0, 3.0})
        for (int i = 0; i < 12; ++i) {
            const PlaneCurve e = PlaneCurve::ellipse(a, 1.0);
            EXPECT_NEAR(sextactic_function(e, 2 * pi * i / 12), 0.0, 1e-12);
        }
}

TEST(Sextactic, SpiralHasConstantSign)
{
    const SextacticScan s = sextactic_scan(PlaneCurve::log_spiral(0.2, {0.0, 2 * pi}), 512);
    EXPECT_EQ(s.count(), 0);
    for (double v : s.s_values)
        EXPECT_GT(v, 0.0);
}

TEST(SextacticProperty, SeededOvalsHaveEvenCountAtLeastSix)
{
    for (const auto& o : fourier_oval_batch(3, 20)) {
        const SextacticScan s = sextactic_scan(o);
        EXPECT_GE(s.count(), 6);
        EXPECT_EQ(s.count() % 2, 0);
        for (double r : s.roots)
            EXPECT_NEAR(sextactic_function(o, r), 0.0, 1e-7);
    }
}

TEST(ConicIntersections, Examples)
{
    const Conic unit(1.0, 0.0, 1.0, 0.0, 0.0, -1.0);
    EXPECT_EQ(conic_pair_intersections(unit, Conic(1.0, 0.0, 1.0, 0.0, 0.0, -4.0)), 0);
    EXPECT_EQ(conic_pair_intersections(unit, Conic(1.0, 0.0, 1.0, -2.0, 0.0, 0.0)), 2);
    EXPECT_EQ(conic_pair_intersections(unit, Conic(0.0, 1.0, 0.0, 0.0, 0.0, -2.0)), 0);
    // Radius 3 meets xy = 2 in four points.
    EXPECT_EQ(conic_pair_intersections(Conic(1.0, 0.0, 1.0, 0.0, 0.0, -9.0), Conic(0.0, 1.0, 0.0, 0.0, 0.0, -2.0)), 4);
    // Tangent circles meet once, without crossing.
    const ConicIntersections tangent = conic_intersections(unit, Conic(1.0, 0.0, 1.0, -4.0, 0.0, 3.0));
    EXPECT_EQ(tangent.points(), 1);
    EXPECT_EQ(tangent.transverse, 0);
    EXPECT_EQ(conic_intersections(unit, Conic(1.0, 0.0, 1.0, -2.0, 0.0, 0.0)).transverse, 2);
}

TEST(ConicIntersections, PointsAtInfinity)
{
    // y = x^2 and y = x^2 + 1 share only their point at infinity.
    EXPECT_EQ(conic_pair_intersections(Conic(1.0, 0.0, 0.0, 0.0, -1.0, 0.0), Conic(1.0, 0.0, 0.0, 0.0, -1.0, 1.0)), 1);
    // xy = 1 and xy = 2 share both asymptotic directions.
    EXPECT_EQ(conic_pair_intersections(Conic(0.0, 1.0, 0.0, 0.0, 0.0, -1.0), Conic(0.0, 1.0, 0.0, 0.0, 0.0, -2.0)), 2);
}

TEST(ConicIntersections, ProportionalConicsThrow)
{
    const Conic k(1.0, 0.0, 1.0, 0.0, 0.0, -1.0);
    try {
        conic_pair_intersections(k, k.negated());
        FAIL() << "expected identical-conic error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IdenticalConic);
    }
    EXPECT_THROW(conic_pair_intersections(k, Conic(0.0, 1.0, 0.0, 0.0, 0.0, 0.0)), Error);
}

TEST(ConicIntersectionsProperty, MatchesParametricScanForEllipses)
{
    Rng rng(2024);
    int seen[5] = {0, 0, 0, 0, 0};
    for (int trial = 0; trial < 200; ++trial) {
        Point c1, c2;
        double a1, b1, t1, a2, b2, t2;
        const Conic e1 = random_ellipse(rng, c1, a1, b1, t1);
        const Conic e2 = random_ellipse(rng, c2, a2, b2, t2);
        const int n = conic_pair_intersections(e1, e2);
        ASSERT_GE(n, 0);
        ASSERT_LE(n, 4);
        EXPECT_EQ(n, parametric_crossings(e2, c1, a1, b1, t1)) << "trial " << trial;
        ++seen[n];
    }
    // The sweep exercises several intersection counts.
    EXPECT_GT(seen[0], 0);
    EXPECT_GT(seen[2], 0);
    EXPECT_GT(seen[4], 0);
}

TEST(ConicRelation, NestedAndExternalEllipses)
{
    const Conic small(1.0, 0.0, 1.0, 0.0, 0.0, -1.0);
    const Conic big(1.0, 0.0, 1.0, 0.0, 0.0, -4.0);
    EXPECT_EQ(conic_pair_relation(small, big), PairRelation::NestedFirstInsideSecond);
    EXPECT_EQ(conic_pair_relation(big, small), PairRelation::NestedSecondInsideFirst);
    EXPECT_EQ(conic_pair_relation(small, Conic(1.0, 0.0, 1.0, -6.0, 0.0, 8.0)), PairRelation::DisjointExternal);
    EXPECT_EQ(conic_pair_relation(small, Conic(0.0, 1.0, 0.0, 0.0, 0.0, -2.0)), PairRelation::DisjointUnclassified);
}

TEST(ConicAdjacentProperty, NeighbouringConicsDoNotCross)
{
    const PlaneCurve sp = PlaneCurve::log_spiral(0.2, {0.0, 3 * pi});
    for (int i = 0; i < 20; ++i) {
        const double t = 0.4 * i;
        const ConicIntersections x = conic_intersections(osculating_conic(sp, t), osculating_conic(sp, t + 1e-3));
        EXPECT_EQ(x.transverse, 0) << t;
        EXPECT_EQ(x.points(), 0) << t;
    }
}

TEST(ConicNesting, SpiralFortySamples)
{
    const NestingReport r = verify_conic_nesting(PlaneCurve::log_spiral(0.2, {0.0, 2 * pi}), 40);
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.pair_count(), 780u);
    EXPECT_EQ(r.count(PairRelation::Intersecting), 0u);
    EXPECT_EQ(r.count(PairRelation::NestedFirstInsideSecond) + r.count(PairRelation::NestedSecondInsideFirst), 780u);
}

TEST(ConicNesting, EllipseArcIsAllSextactic)
{
    const NestingReport r = verify_conic_nesting(PlaneCurve::ellipse_arc(2.0, 1.0, {0.2, 1.2}), 10);
    EXPECT_FALSE(r.hypothesis_holds);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.failure.has_value());
    EXPECT_EQ(r.failure->reason, "sextactic point");
}

TEST(ConicNesting, OvalWithSextacticPointFailsAtTheSignChange)
{
    const PlaneCurve o = fourier_oval_batch(3, 1).front();
    const SextacticScan s = sextactic_scan(o);
    ASSERT_GE(s.count(), 6);
    const NestingReport r = verify_conic_nesting(PlaneCurve(o.family(), {0.0, 2 * pi}, false), 60);
    EXPECT_FALSE(r.hypothesis_holds);
    ASSERT_TRUE(r.failure.has_value());
    double nearest = 1e9;
    for (double root : s.roots)
        nearest = std::min(nearest, std::abs(root - r.failure->t));
    EXPECT_LT(nearest, 1e-7);
}

TEST(ConicNesting, SingleSampleIsVacuous)
{
    const NestingReport r = verify_conic_nesting(PlaneCurve::log_spiral(0.2, {0.0, 1.0}), 1);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.degenerate);
}
