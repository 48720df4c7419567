#include "osculate/circles.hpp"

#include "osculate/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace osc {

Circle osculating_circle(const PlaneCurve& c, double t)
{
    const double k = curvature(c, t);
    if (std::abs(k) <= 1e-10)
        throw Error(ErrorKind::FlatPoint, "osculating circle undefined where |kappa| <= 1e-10");
    const Point p = c.point(t);
    const Vec2 n = unit_normal(c, t);
    return {p + (1.0 / k) * n, 1.0 / std::abs(k)};
}

Point evolute_point(const PlaneCurve& c, double t) { return osculating_circle(c, t).center; }

Point involute_point(const PlaneCurve& c, double t, double string_length)
{
    const double wound = arc_length(c, c.domain().lo, t);
    const double free_part = string_length - wound;
    if (free_part < 0.0)
        throw Error(ErrorKind::Usage, "string exhausted: remaining length " + std::to_string(free_part));
    return c.point(t) + free_part * unit_tangent(c, t);
}

double default_pair_tolerance(const Circle& a, const Circle& b) noexcept { return 1e-9 * (a.radius + b.radius); }

PairRelation classify_pair(const Circle& a, const Circle& b, double tol)
{
    const double d = distance(a.center, b.center);
    const double diff = std::abs(a.radius - b.radius);
    const double sum = a.radius + b.radius;
    if (d < diff - tol)
        return a.radius > b.radius ? PairRelation::NestedSecondInsideFirst : PairRelation::NestedFirstInsideSecond;
    if (std::abs(d - diff) <= tol)
        return PairRelation::InternallyTangent;
    if (d > sum + tol)
        return PairRelation::DisjointExternal;
    if (std::abs(d - sum) <= tol)
        return PairRelation::ExternallyTangent;
    return PairRelation::Intersecting;
}

NestingReport verify_tait_kneser(const PlaneCurve& c, int n_samples, const TaitKneserOptions& opts)
{
    if (n_samples < 3)
        throw Error(ErrorKind::Usage, "Tait-Kneser sweep needs at least 3 samples");
    const Interval dom = c.domain();
    NestingReport rep;
    rep.hypothesis_name = "monotone_curvature";
    rep.samples.resize(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i)
        rep.samples[i] = (i == n_samples - 1) ? dom.hi : dom.lo + dom.length() * i / (n_samples - 1);

    std::vector<double> kappa(rep.samples.size());
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        kappa[i] = curvature(c, rep.samples[i]);
        if (std::abs(kappa[i]) <= 1e-10) {
            rep.failure = HypothesisFailure{rep.samples[i], "curvature vanishes"};
            rep.hypothesis_holds = false;
            rep.passed = false;
            return rep;
        }
    }

    const bool increasing = kappa[1] > kappa[0];
    rep.hypothesis_holds = true;
    for (std::size_t i = 0; i + 1 < kappa.size(); ++i) {
        const bool ok = increasing ? kappa[i + 1] > kappa[i] : kappa[i + 1] < kappa[i];
        const bool same_sign = (kappa[i] > 0.0) == (kappa[i + 1] > 0.0);
        if (!ok || !same_sign) {
            rep.hypothesis_holds = false;
            rep.failure = HypothesisFailure{rep.samples[i + 1], same_sign ? "curvature not strictly monotone"
                                                                          : "curvature changes sign"};
            break;
        }
    }

    std::vector<Circle> circles;
    circles.reserve(rep.samples.size());
    for (double t : rep.samples)
        circles.push_back(osculating_circle(c, t));

    const std::size_t n = circles.size();
    rep.verdicts.assign(n, std::vector<std::optional<PairRelation>>(n));
    double worst = std::numeric_limits<double>::infinity();
    bool all_nested = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Circle& a = circles[i];
            const Circle& b = circles[j];
            const PairRelation r = classify_pair(a, b, opts.rel_tol * (a.radius + b.radius));
            rep.verdicts[i][j] = r;
            rep.verdicts[j][i] = swapped(r);
            // Coalescing neighbours may land inside the tangency band; the margin still decides.
            all_nested = all_nested && (is_nested(r) || r == PairRelation::InternallyTangent);
            worst = std::min(worst, std::abs(a.radius - b.radius) - distance(a.center, b.center));
        }
    rep.worst_margin = worst;

    // The evolute arc between adjacent centers has length |r_i - r_{i+1}| when no cusp intervenes.
    const PlaneCurve evolute = PlaneCurve::evolute_of(c, dom);
    double max_defect = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double arc = arc_length(evolute, rep.samples[i], rep.samples[i + 1]);
        max_defect = std::max(max_defect, std::abs(arc - std::abs(circles[i].radius - circles[i + 1].radius)));
    }
    rep.metrics["max_string_defect"] = max_defect;

    rep.passed = rep.hypothesis_holds && all_nested && worst > 0.0 && max_defect < opts.string_tol;
    return rep;
}

EvoluteLength evolute_length(const PlaneCurve& c, int grid_n)
{
    if (!c.closed())
        throw Error(ErrorKind::Usage, "signed evolute length needs a closed curve");
    const std::vector<Vertex> vertices = find_vertices(c, grid_n);
    if (vertices.empty())
        throw Error(ErrorKind::DegenerateFamily, "closed curve without vertices");
    const Interval dom = c.domain();
    const PlaneCurve evolute = PlaneCurve::evolute_of(c, dom);

    EvoluteLength out;
    for (const auto& v : vertices)
        out.cusps.push_back(v.t);

    auto rho_prime_sign = [&](double t) {
        // rho = 1/kappa, rho' = -kappa'/kappa^2.
        const Jet k = curvature_jet(c, t, 1);
        return k[1] > 0.0 ? -1.0 : 1.0;
    };
    auto add_arc = [&](double a, double b) {
        if (b - a <= 0.0)
            return 0.0;
        return arc_length(evolute, a, b);
    };

    const std::size_t m = out.cusps.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a = out.cusps[i];
        double len = 0.0;
        double mid = 0.0;
        if (i + 1 < m) {
            const double b = out.cusps[i + 1];
            len = add_arc(a, b);
            mid = 0.5 * (a + b);
        } else {
            // Wrap-around arc from the last cusp through t1 == t0 to the first.
            const double b = out.cusps.front();
            len = add_arc(a, dom.hi) + add_arc(dom.lo, b);
            const double span = (dom.hi - a) + (b - dom.lo);
            mid = a + 0.5 * span;
            if (mid > dom.hi)
                mid -= dom.length();
        }
        out.signed_total += rho_prime_sign(mid) * len;
        out.unsigned_total += len;
    }
    return out;
}

double evolute_signed_length(const PlaneCurve& c) { return evolute_length(c).signed_total; }

} // namespace osc
