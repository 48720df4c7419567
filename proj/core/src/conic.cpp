#include "osculate/conic.hpp"

#include "osculate/error.hpp"
#include "osculate/fit.hpp"
#include "osculate/polynomial.hpp"
#include "osculate/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace osc {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Graded implicit layout is 1, x, y, x^2, xy, y^2.
std::array<double, 6> from_graded(const std::vector<double>& g) { return {g[3], g[4], g[5], g[1], g[2], g[0]}; }

double frobenius(const std::array<double, 6>& k)
{
    return std::sqrt(k[0] * k[0] + k[2] * k[2] + k[5] * k[5] + 0.5 * (k[1] * k[1] + k[3] * k[3] + k[4] * k[4]));
}

// F(R p) for the rotation R by angle th.
std::array<double, 6> rotated(const std::array<double, 6>& k, double th)
{
    const double c = std::cos(th), s = std::sin(th);
    const auto [a, b, cc, d, e, f] = k;
    // x = c X - s Y, y = s X + c Y.
    return {
        a * c * c + b * c * s + cc * s * s,
        -2.0 * a * c * s + b * (c * c - s * s) + 2.0 * cc * s * c,
        a * s * s - b * c * s + cc * c * c,
        d * c + e * s,
        -d * s + e * c,
        f,
    };
}

// Common real directions of the quadratic parts: intersections on the line at infinity.
int common_points_at_infinity(const std::array<double, 6>& k1, const std::array<double, 6>& k2)
{
    // In the rotated chart y^2 has a nonzero coefficient, so directions are (1, m).
    const double a = k1[0], b = k1[1], c = k1[2];
    const double disc = b * b - 4.0 * a * c;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (disc < -1e-12 * scale * scale)
        return 0;
    std::vector<double> ms;
    if (std::abs(disc) <= 1e-12 * scale * scale) {
        ms.push_back(-b / (2.0 * c));
    } else {
        const double r = std::sqrt(disc);
        ms.push_back((-b - r) / (2.0 * c));
        ms.push_back((-b + r) / (2.0 * c));
    }
    int n = 0;
    for (double m : ms) {
        const double q2 = k2[0] + k2[1] * m + k2[2] * m * m;
        if (std::abs(q2) <= 1e-9 * (1.0 + m * m))
            ++n;
    }
    return n;
}

Point point_on(const Conic& c)
{
    const auto ctr = c.center();
    const auto& k = c.coeffs();
    const Point o = ctr.value_or(Point{0.0, 0.0});
    // F(o + s (1, 0)) = a s^2 + (2 a ox + b oy + d) s + F(o).
    const double A = k[0], B = 2.0 * k[0] * o.x + k[1] * o.y + k[3], C = c(o);
    const double disc = B * B - 4.0 * A * C;
    if (A == 0.0 || disc < 0.0)
        return {std::numeric_limits<double>::quiet_NaN(), 0.0};
    return {o.x + (-B + std::sqrt(disc)) / (2.0 * A), o.y};
}

} // namespace

Conic::Conic(double a, double b, double c, double d, double e, double f) : k_{a, b, c, d, e, f}
{
    const double n = frobenius(k_);
    if (!(n > 0.0) || !std::isfinite(n))
        throw Error(ErrorKind::Usage, "conic coefficients must be finite and not all zero");
    for (auto& v : k_)
        v /= n;
}

Conic::Conic(const ImplicitPoly& p)
{
    if (p.degree() != 2)
        throw Error(ErrorKind::Usage, "conic needs a degree-2 implicit polynomial");
    const auto k = from_graded(p.coeffs());
    *this = Conic(k[0], k[1], k[2], k[3], k[4], k[5]);
}

std::array<std::array<double, 3>, 3> Conic::matrix() const noexcept
{
    const auto [a, b, c, d, e, f] = k_;
    return {{{a, b / 2, d / 2}, {b / 2, c, e / 2}, {d / 2, e / 2, f}}};
}

double Conic::det() const noexcept
{
    const auto m = matrix();
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool Conic::degenerate() const noexcept { return std::abs(det()) <= 1e-10; }

ConicType Conic::type() const noexcept
{
    const double d2 = k_[0] * k_[2] - 0.25 * k_[1] * k_[1];
    if (std::abs(d2) <= 1e-12)
        return ConicType::Parabola;
    return d2 > 0.0 ? ConicType::Ellipse : ConicType::Hyperbola;
}

std::optional<Point> Conic::center() const noexcept
{
    // grad = 0: [2a b; b 2c] p = -[d; e].
    const double a = 2.0 * k_[0], b = k_[1], c = 2.0 * k_[2];
    const double det2 = a * c - b * b;
    if (std::abs(det2) <= 1e-12)
        return std::nullopt;
    return Point{(-k_[3] * c + k_[4] * b) / det2, (-a * k_[4] + b * k_[3]) / det2};
}

double Conic::operator()(Point p) const noexcept
{
    const auto [a, b, c, d, e, f] = k_;
    return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f;
}

Vec2 Conic::gradient(Point p) const noexcept
{
    const auto [a, b, c, d, e, f] = k_;
    return {2.0 * a * p.x + b * p.y + d, b * p.x + 2.0 * c * p.y + e};
}

ImplicitPoly Conic::implicit() const { return ImplicitPoly(2, {k_[5], k_[3], k_[4], k_[0], k_[1], k_[2]}); }

Conic Conic::negated() const { return Conic(-k_[0], -k_[1], -k_[2], -k_[3], -k_[4], -k_[5]); }

Conic osculating_conic(const PlaneCurve& c, double t)
{
    const OsculatingFit fit = osculating_fit(c, t, 2);
    if (fit.degenerate)
        throw Error(ErrorKind::DegenerateOsculation, "osculating conic is not unique at t = " + std::to_string(t));
    return Conic(fit.poly);
}

double sextactic_function(const PlaneCurve& c, double t)
{
    const OsculatingFit fit = osculating_fit(c, t, 2);
    if (fit.degenerate)
        throw Error(ErrorKind::DegenerateOsculation, "osculating conic is not unique at t = " + std::to_string(t));
    return fit.residual;
}

SextacticScan sextactic_scan(const PlaneCurve& c, int grid_n)
{
    if (grid_n < 16)
        throw Error(ErrorKind::Usage, "sextactic scan needs grid_n >= 16");
    const Interval dom = c.domain();
    SextacticScan out;
    out.ts.resize(static_cast<std::size_t>(grid_n) + 1);
    out.s_values.resize(out.ts.size());
    for (int i = 0; i <= grid_n; ++i) {
        out.ts[i] = (i == grid_n) ? dom.hi : dom.lo + dom.length() * i / grid_n;
        out.s_values[i] = sextactic_function(c, out.ts[i]);
    }
    auto s = [&](double t) { return sextactic_function(c, t); };
    out.roots = sign_change_roots(s, out.ts, out.s_values, {.grid_n = grid_n, .tol = 1e-10, .periodic = c.closed()});
    return out;
}

ConicIntersections conic_intersections(const Conic& c1, const Conic& c2)
{
    if (c1.degenerate() || c2.degenerate())
        throw Error(ErrorKind::Usage, "intersection count needs nondegenerate conics");
    double dm = 0.0, dp = 0.0;
    for (int i = 0; i < 6; ++i) {
        dm += std::pow(c1.coeffs()[i] - c2.coeffs()[i], 2);
        dp += std::pow(c1.coeffs()[i] + c2.coeffs()[i], 2);
    }
    if (std::sqrt(dm) < 1e-10 || std::sqrt(dp) < 1e-10)
        throw Error(ErrorKind::IdenticalConic, "conics are proportional");

    // A generic rotation keeps y^2 in both equations and separates intersection abscissae.
    std::array<double, 6> k1{}, k2{};
    double th = 0.0;
    for (int attempt = 0;; ++attempt) {
        if (attempt == 8)
            throw Error(ErrorKind::DegenerateOsculation, "no generic chart found for the conic pair");
        th = 0.37 + 0.61 * attempt;
        k1 = rotated(c1.coeffs(), th);
        k2 = rotated(c2.coeffs(), th);
        if (std::abs(k1[2]) > 1e-6 && std::abs(k2[2]) > 1e-6)
            break;
    }
    const double cs = std::cos(th), sn = std::sin(th);
    auto unrotate = [&](double X, double Y) { return Point{cs * X - sn * Y, sn * X + cs * Y}; };

    // F = A y^2 + B(x) y + C(x).
    const Polynomial A1({k1[2]}), A2({k2[2]});
    const Polynomial B1({k1[4], k1[1]}), B2({k2[4], k2[1]});
    const Polynomial C1({k1[5], k1[3], k1[0]}), C2({k2[5], k2[3], k2[0]});
    const Polynomial ac = A1 * C2 - A2 * C1;
    const Polynomial ab = A1 * B2 - A2 * B1;
    const Polynomial bc = B1 * C2 - B2 * C1;
    const Polynomial res = ac * ac - ab * bc;
    if (res.trimmed(1e-14).is_zero())
        throw Error(ErrorKind::IdenticalConic, "conics share a component");

    std::vector<Point> candidates;
    for (double x : SturmSequence(res).real_roots(1e-13)) {
        const double p = A2(x) * B1(x) - A1(x) * B2(x);
        const double scale = std::max({std::abs(k1[2]), std::abs(B1(x)), std::abs(C1(x)), 1.0});
        if (std::abs(p) > 1e-12 * scale) {
            const double q = A2(x) * C1(x) - A1(x) * C2(x);
            candidates.push_back(unrotate(x, -q / p));
            continue;
        }
        // Equations proportional in y at this x: real partners iff the quadratic has real roots.
        const double disc = B1(x) * B1(x) - 4.0 * k1[2] * C1(x);
        if (disc < -1e-14 * scale * scale)
            continue;
        const double r = std::sqrt(std::max(disc, 0.0));
        candidates.push_back(unrotate(x, (-B1(x) - r) / (2.0 * k1[2])));
        if (disc > 1e-14 * scale * scale)
            candidates.push_back(unrotate(x, (-B1(x) + r) / (2.0 * k1[2])));
    }

    ConicIntersections out;
    for (const Point& p : candidates) {
        // Walk a step along conic 1 on both sides and read the distance to conic 2 there.
        const double L = std::max(1.0, norm(p));
        const double step = 1e-3 * L;
        const double floor = 1e-10 * L;
        const Vec2 g = c1.gradient(p);
        if (norm(g) == 0.0)
            continue;
        const Vec2 tau = (1.0 / norm(g)) * perp(g);
        double side[2];
        for (int k = 0; k < 2; ++k) {
            Point q = p + ((k == 0 ? -step : step)) * tau;
            for (int it = 0; it < 4; ++it) {
                const Vec2 gq = c1.gradient(q);
                const double n2 = dot(gq, gq);
                if (n2 == 0.0)
                    break;
                q = q - (c1(q) / n2) * gq;
            }
            const double gn = norm(c2.gradient(q));
            side[k] = gn > 0.0 ? c2(q) / gn : 0.0;
        }
        if (std::abs(side[0]) <= floor && std::abs(side[1]) <= floor) {
            ++out.unresolved;
            continue;
        }
        ++out.affine;
        if (sgn(side[0]) * sgn(side[1]) < 0)
            ++out.transverse;
    }
    out.at_infinity = common_points_at_infinity(k1, k2);
    return out;
}

int conic_pair_intersections(const Conic& c1, const Conic& c2) { return conic_intersections(c1, c2).points(); }

PairRelation conic_pair_relation(const Conic& c1, const Conic& c2)
{
    if (conic_pair_intersections(c1, c2) > 0)
        return PairRelation::Intersecting;
    if (c1.type() != ConicType::Ellipse || c2.type() != ConicType::Ellipse)
        return PairRelation::DisjointUnclassified;
    const Point p1 = point_on(c1), p2 = point_on(c2);
    if (std::isnan(p1.x) || std::isnan(p2.x))
        return PairRelation::DisjointUnclassified;
    auto inside = [](const Conic& c, Point p) { return sgn(c(p)) == sgn(c(*c.center())); };
    if (inside(c1, p2))
        return PairRelation::NestedSecondInsideFirst;
    if (inside(c2, p1))
        return PairRelation::NestedFirstInsideSecond;
    return PairRelation::DisjointExternal;
}

NestingReport verify_conic_nesting(const PlaneCurve& c, int n_samples, const ConicOptions& opts)
{
    if (n_samples < 1)
        throw Error(ErrorKind::Usage, "need at least one sample");
    const Interval dom = c.domain();
    NestingReport rep;
    rep.hypothesis_name = "sextactic_free";
    rep.worst_margin = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < n_samples; ++i)
        rep.samples.push_back(n_samples == 1 ? dom.lo
                                             : (i == n_samples - 1 ? dom.hi : dom.lo + dom.length() * i / (n_samples - 1)));

    std::vector<Conic> conics;
    double min_rel = std::numeric_limits<double>::infinity();
    int s0 = 0;
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const double t = rep.samples[i];
        const OsculatingFit fit = osculating_fit(c, t, 2);
        std::string reason;
        if (fit.degenerate)
            reason = "osculating conic is not unique";
        else if (fit.relative_residual <= opts.sextactic_zero)
            reason = "sextactic point";
        const int s = sgn(fit.residual);
        double where = t;
        if (reason.empty() && s0 != 0 && s != s0) {
            reason = "sextactic function changes sign";
            // Locate the sign change between the two samples.
            double a = rep.samples[i - 1], b = t;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b);
                if (sgn(sextactic_function(c, m)) == s0)
                    a = m;
                else
                    b = m;
            }
            where = 0.5 * (a + b);
        }
        if (!reason.empty()) {
            rep.hypothesis_holds = false;
            rep.failure = HypothesisFailure{where, reason};
            rep.passed = false;
            return rep;
        }
        s0 = s;
        min_rel = std::min(min_rel, fit.relative_residual);
        conics.emplace_back(fit.poly);
    }
    rep.hypothesis_holds = true;
    rep.metrics["min_relative_sextactic"] = min_rel;
    rep.metrics["sextactic_sign"] = s0;

    const std::size_t n = conics.size();
    if (n < 2) {
        rep.degenerate = true;
        rep.passed = true;
        rep.notes.push_back("fewer than two samples; the pairwise claim is vacuous");
        return rep;
    }
    rep.verdicts.assign(n, std::vector<std::optional<PairRelation>>(n));
    bool disjoint = true;
    int ellipse_pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const PairRelation r = conic_pair_relation(conics[i], conics[j]);
            rep.verdicts[i][j] = r;
            rep.verdicts[j][i] = swapped(r);
            disjoint = disjoint && r != PairRelation::Intersecting;
            if (conics[i].type() == ConicType::Ellipse && conics[j].type() == ConicType::Ellipse)
                ++ellipse_pairs;
        }
    rep.metrics["ellipse_pairs"] = ellipse_pairs;
    if (static_cast<std::size_t>(ellipse_pairs) < n * (n - 1) / 2)
        rep.notes.push_back("non-elliptic osculating conics present; nesting is decided only for ellipse pairs");
    rep.passed = disjoint;
    return rep;
}

} // namespace osc
