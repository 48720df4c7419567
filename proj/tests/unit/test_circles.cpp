#include "osculate/circles.hpp"
#include "osculate/error.hpp"
#include "osculate/implicit.hpp"
#include "osculate/sampling.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

using namespace osc;
using std::numbers::pi;

TEST(OsculatingCircle, UnitCircleIsItsOwn)
{
    const PlaneCurve c = PlaneCurve::ellipse(1.0, 1.0);
    for (double t : {0.0, 1.0, 4.0}) {
        const Circle o = osculating_circle(c, t);
        EXPECT_NEAR(o.center.x, 0.0, 1e-14);
        EXPECT_NEAR(o.center.y, 0.0, 1e-14);
        EXPECT_NEAR(o.radius, 1.0, 1e-14);
    }
}

TEST(OsculatingCircle, EllipseAtMajorVertex)
{
    const Circle o = osculating_circle(PlaneCurve::ellipse(2.0, 1.0), 0.0);
    EXPECT_NEAR(o.center.x, 1.5, 1e-14);
    EXPECT_NEAR(o.center.y, 0.0, 1e-14);
    EXPECT_NEAR(o.radius, 0.5, 1e-14);
}

TEST(OsculatingCircle, ParabolaAtOrigin)
{
    const Circle o = osculating_circle(PlaneCurve::polynomial_graph({0, 0, 1}, {-1.0, 1.0}), 0.0);
    EXPECT_NEAR(o.center.x, 0.0, 1e-15);
    EXPECT_NEAR(o.center.y, 0.5, 1e-15);
    EXPECT_NEAR(o.radius, 0.5, 1e-15);
}

TEST(OsculatingCircle, FlatPointThrows)
{
    try {
        (void)osculating_circle(PlaneCurve::polynomial_graph({0, 0, 0, 1}, {-1.0, 1.0}), 0.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FlatPoint);
    }
}

TEST(OsculatingCircleProperty, SecondOrderContact)
{
    Rng rng(11);
    std::vector<PlaneCurve> curves = fourier_oval_batch(3, 5);
    curves.push_back(PlaneCurve::log_spiral(0.2, {0.0, 6.0}));
    curves.push_back(PlaneCurve::ellipse(2.0, 1.0));
    for (const auto& c : curves)
        for (int k = 0; k < 10; ++k) {
            const double t = uniform(rng, c.domain().lo, c.domain().hi);
            const Circle o = osculating_circle(c, t);
            // G(p) = |p - center|^2 - r^2 along the curve.
            const ImplicitPoly g(2, {o.center.x * o.center.x + o.center.y * o.center.y - o.radius * o.radius,
                                     -2 * o.center.x, -2 * o.center.y, 1.0, 0.0, 1.0});
            const CurveJet2 j = c.jet(t, 3);
            const Jet comp = g.compose(j.x, j.y);
            for (int i = 0; i <= 2; ++i)
                EXPECT_NEAR(comp[i], 0.0, 1e-9);
        }
}

TEST(Evolute, EllipseMatchesAstroidClosedForm)
{
    const double a = 2.0, b = 1.0;
    const PlaneCurve c = PlaneCurve::ellipse(a, b);
    const Point p0 = evolute_point(c, 0.0);
    EXPECT_NEAR(p0.x, 1.5, 1e-14);
    EXPECT_NEAR(p0.y, 0.0, 1e-14);
    const Point p1 = evolute_point(c, pi / 2);
    EXPECT_NEAR(p1.x, 0.0, 1e-14);
    EXPECT_NEAR(p1.y, -3.0, 1e-14);
    for (int i = 0; i < 100; ++i) {
        const double t = 2 * pi * i / 100;
        const Point p = evolute_point(c, t);
        EXPECT_NEAR(p.x, (a * a - b * b) / a * std::pow(std::cos(t), 3), 1e-12);
        EXPECT_NEAR(p.y, -(a * a - b * b) / b * std::pow(std::sin(t), 3), 1e-12);
    }
}

TEST(Evolute, CircleCollapsesToCenter)
{
    const PlaneCurve c = PlaneCurve::ellipse(1.0, 1.0);
    for (double t : {0.0, 2.0, 5.0}) {
        const Point p = evolute_point(c, t);
        EXPECT_NEAR(p.x, 0.0, 1e-14);
        EXPECT_NEAR(p.y, 0.0, 1e-14);
    }
}

TEST(Involute, StraightLine)
{
    const PlaneCurve line = PlaneCurve::polynomial_graph({0.0, 1.0}, {0.0, 2.0});
    const double wound = std::sqrt(2.0) * 0.5;
    const Point p = involute_point(line, 0.5, wound + 0.3);
    const double s = 0.3 / std::sqrt(2.0);
    EXPECT_NEAR(p.x, 0.5 + s, 1e-12);
    EXPECT_NEAR(p.y, 0.5 + s, 1e-12);
    EXPECT_THROW((void)involute_point(line, 1.0, 0.1), Error);
}

TEST(Involute, CircleMatchesClassicalInvolute)
{
    // With the whole circumference as string, the free end traces
    // (cos u + u sin u, sin u - u cos u) at u = t - 2 pi.
    const PlaneCurve c = PlaneCurve::ellipse(1.0, 1.0);
    for (double t : {0.3, 1.0, 2.5, 4.0, 6.0}) {
        const Point p = involute_point(c, t, 2 * pi);
        const double u = t - 2 * pi;
        EXPECT_NEAR(p.x, std::cos(u) + u * std::sin(u), 1e-9);
        EXPECT_NEAR(p.y, std::sin(u) - u * std::cos(u), 1e-9);
    }
}

TEST(Involute, OfEllipseEvoluteReproducesTheEllipse)
{
    // On (pi/2, pi) the radius of curvature decreases from a^2/b = 4, so a
    // string of that length unwinding along the evolute traces the ellipse.
    const PlaneCurve ellipse = PlaneCurve::ellipse(2.0, 1.0);
    const PlaneCurve ev = PlaneCurve::evolute_of(ellipse, {pi / 2, pi});
    const double slack = osculating_circle(ellipse, pi / 2).radius;
    for (int i = 1; i < 20; ++i) {
        const double t = pi / 2 + (pi / 2) * i / 20;
        const Point p = involute_point(ev, t, slack);
        const Point q = ellipse.point(t);
        EXPECT_NEAR(p.x, q.x, 1e-6);
        EXPECT_NEAR(p.y, q.y, 1e-6);
    }
}

TEST(ClassifyPair, Examples)
{
    EXPECT_EQ(classify_pair({{0, 0}, 2}, {{0.5, 0}, 1}, 1e-9), PairRelation::NestedSecondInsideFirst);
    EXPECT_EQ(classify_pair({{0.5, 0}, 1}, {{0, 0}, 2}, 1e-9), PairRelation::NestedFirstInsideSecond);
    EXPECT_EQ(classify_pair({{0, 0}, 1}, {{3, 0}, 1}, 1e-9), PairRelation::DisjointExternal);
    EXPECT_EQ(classify_pair({{0, 0}, 1}, {{1, 0}, 1}, 1e-9), PairRelation::Intersecting);
    EXPECT_EQ(classify_pair({{0, 0}, 2}, {{1, 0}, 1}, 1e-9), PairRelation::InternallyTangent);
    EXPECT_EQ(classify_pair({{0, 0}, 1}, {{2, 0}, 1}, 1e-9), PairRelation::ExternallyTangent);
}

TEST(TaitKneser, LogSpiralAllPairsNested)
{
    const NestingReport r = verify_tait_kneser(PlaneCurve::log_spiral(0.2, {0.0, 3 * pi}), 100);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_EQ(r.count(PairRelation::NestedFirstInsideSecond) + r.count(PairRelation::NestedSecondInsideFirst), 4950u);
    EXPECT_GT(r.worst_margin, 0.0);
    EXPECT_LT(r.metrics.at("max_string_defect"), 1e-7);
}

TEST(TaitKneser, EllipseBetweenVertices)
{
    const NestingReport r = verify_tait_kneser(PlaneCurve::ellipse_arc(2.0, 1.0, {0.0, pi / 2}), 50);
    EXPECT_TRUE(r.passed);
}

TEST(TaitKneser, EllipseAcrossVertexFailsHypothesis)
{
    const NestingReport r = verify_tait_kneser(PlaneCurve::ellipse_arc(2.0, 1.0, {0.0, pi}), 50);
    EXPECT_FALSE(r.hypothesis_holds);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.failure.has_value());
    EXPECT_GT(r.failure->t, pi / 2 - 0.1);
    EXPECT_GT(r.count(PairRelation::Intersecting), 0u);
    // Across the cusp the string identity breaks down.
    EXPECT_GT(r.metrics.at("max_string_defect"), 1e-3);
}

TEST(TaitKneserProperty, MarginPositiveOnMonotoneArcs)
{
    const auto ovals = fourier_oval_batch(21, 5);
    for (const auto& o : ovals) {
        const auto v = find_vertices(o);
        ASSERT_GE(v.size(), 2u);
        const PlaneCurve arc(o.family(), {v[0].t + 1e-3, v[1].t - 1e-3}, false);
        const NestingReport r = verify_tait_kneser(arc, 25);
        EXPECT_TRUE(r.hypothesis_holds);
        EXPECT_GT(r.worst_margin, 0.0);
        EXPECT_TRUE(r.passed);
        EXPECT_EQ(r.count(PairRelation::Intersecting), 0u);
    }
}

TEST(EvoluteLength, EllipseSignedTotalVanishes)
{
    const EvoluteLength e = evolute_length(PlaneCurve::ellipse(2.0, 1.0));
    EXPECT_NEAR(e.signed_total, 0.0, 1e-8);
    EXPECT_EQ(e.cusps.size(), 4u);

    // Unsigned length from quadrature of the astroid-like closed form.
    const double A = 1.5, B = 3.0;
    auto speed = [&](double t) {
        const double s = std::sin(t), c = std::cos(t);
        return 3.0 * std::abs(s * c) * std::sqrt(A * A * c * c + B * B * s * s);
    };
    using boost::math::quadrature::gauss_kronrod;
    const double oracle = 4.0 * gauss_kronrod<double, 61>::integrate(speed, 0.0, pi / 2, 20, 1e-14);
    EXPECT_NEAR(e.unsigned_total, oracle, 1e-8);
    EXPECT_NEAR(oracle, 14.0, 1e-9);
}

TEST(EvoluteLength, SeededOvalsVanish)
{
    for (const auto& o : fourier_oval_batch(5, 5))
        EXPECT_NEAR(evolute_signed_length(o), 0.0, 1e-6);
}

TEST(EvoluteLength, CircleIsDegenerate)
{
    EXPECT_THROW((void)evolute_signed_length(PlaneCurve::ellipse(1.0, 1.0)), Error);
    EXPECT_THROW((void)evolute_signed_length(PlaneCurve::log_spiral(0.2, {0.0, 1.0})), Error);
}
