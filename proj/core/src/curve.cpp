#include "osculate/curve.hpp"

#include "osculate/error.hpp"
#include "osculate/implicit.hpp"
#include "osculate/polynomial.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace osc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ImplicitPoly cubic_poly(const std::array<double, 10>& c)
{
    return ImplicitPoly(3, std::vector<double>(c.begin(), c.end()));
}

// d/dx and d/dy of an implicit polynomial, same graded layout.
ImplicitPoly partial(const ImplicitPoly& f, bool wrt_x)
{
    const int d = std::max(f.degree() - 1, 0);
    std::vector<double> out(static_cast<std::size_t>(ImplicitPoly::monomial_count(d)), 0.0);
    for (int k = 0; k < static_cast<int>(f.coeffs().size()); ++k) {
        const auto [i, j] = ImplicitPoly::exponents(k);
        const int e = wrt_x ? i : j;
        if (e == 0)
            continue;
        const int ni = wrt_x ? i - 1 : i;
        const int nj = wrt_x ? j : j - 1;
        const int idx = ImplicitPoly::monomial_count(ni + nj - 1) + nj;
        out[static_cast<std::size_t>(idx)] += e * f.coeffs()[static_cast<std::size_t>(k)];
    }
    return ImplicitPoly(d, std::move(out));
}

// Smallest positive r with F(center + r u) = 0.
double first_ray_root(const ImplicitPoly& f, Point center, Vec2 u)
{
    const Jet x = Jet(0.0, {center.x, u.x, 0.0, 0.0});
    const Jet y = Jet(0.0, {center.y, u.y, 0.0, 0.0});
    const Jet g = f.compose(x, y);
    const Polynomial p(std::vector<double>(g.coeffs().begin(), g.coeffs().end()));
    if (p.trimmed(1e-14).degree() < 1)
        throw Error(ErrorKind::Domain, "cubic has no isolated crossing along the polar ray");
    const SturmSequence sturm(p, 1e-14);
    for (double r : sturm.real_roots(1e-14))
        if (r > 0.0)
            return r;
    throw Error(ErrorKind::Domain, "polar ray from the chart center does not meet the cubic");
}

CurveJet2 cubic_arc_jet(const CubicOvalArc& arc, double t, int order)
{
    const ImplicitPoly f = cubic_poly(arc.coeffs);
    const ImplicitPoly fx = partial(f, true);
    const ImplicitPoly fy = partial(f, false);
    const Jet ux = cos_jet(t, order);
    const Jet uy = sin_jet(t, order);
    const double r0 = first_ray_root(f, arc.center, {ux.value(), uy.value()});

    // Newton iteration in jet arithmetic; the number of correct orders doubles per step.
    Jet r = Jet::constant(t, order, r0);
    for (int it = 0; it < 6; ++it) {
        const Jet x = r * ux + arc.center.x;
        const Jet y = r * uy + arc.center.y;
        const Jet g = f.compose(x, y);
        const Jet dg = fx.compose(x, y) * ux + fy.compose(x, y) * uy;
        if (dg.value() == 0.0)
            throw Error(ErrorKind::Singularity, "polar chart tangent to the cubic");
        r = r - g / dg;
    }
    return {r * ux + arc.center.x, r * uy + arc.center.y};
}

CurveJet2 evolute_jet(const PlaneCurve& base, double t, int order)
{
    if (order + 2 > kMaxJetOrder)
        throw Error(ErrorKind::Usage, "evolute jets are limited to order 8");
    const CurveJet2 j = base.jet(t, order + 2);
    const Jet dx = jet_derivative(j.x);
    const Jet dy = jet_derivative(j.y);
    const Jet ddx = jet_derivative(dx);
    const Jet ddy = jet_derivative(dy);
    const Jet dxo = dx.truncated(order), dyo = dy.truncated(order);
    const Jet s2 = dxo * dxo + dyo * dyo;
    const Jet cr = dxo * ddy - dyo * ddx;
    if (cr.value() == 0.0)
        throw Error(ErrorKind::FlatPoint, "evolute undefined at a point of zero curvature");
    const Jet q = s2 / cr;
    return {j.x.truncated(order) - q * dyo, j.y.truncated(order) + q * dxo};
}

struct JetVisitor {
    double t;
    int order;

    CurveJet2 operator()(const Ellipse& e) const { return {e.a * cos_jet(t, order), e.b * sin_jet(t, order)}; }
    CurveJet2 operator()(const LogSpiral& s) const
    {
        const Jet e = exp(s.growth * Jet::variable(t, order));
        return {e * cos_jet(t, order), e * sin_jet(t, order)};
    }
    CurveJet2 operator()(const PolynomialGraph& p) const
    {
        return {Jet::variable(t, order), polynomial_jet(p.coeffs, t, order)};
    }
    CurveJet2 operator()(const FourierOval& f) const
    {
        const Jet tv = Jet::variable(t, order);
        Jet r = Jet::constant(t, order, 1.0);
        for (std::size_t k = 0; k < f.cos_coeffs.size(); ++k)
            r = r + f.cos_coeffs[k] * cos(static_cast<double>(k + 1) * tv);
        for (std::size_t k = 0; k < f.sin_coeffs.size(); ++k)
            r = r + f.sin_coeffs[k] * sin(static_cast<double>(k + 1) * tv);
        return {r * cos_jet(t, order), r * sin_jet(t, order)};
    }
    CurveJet2 operator()(const CubicOvalArc& c) const { return cubic_arc_jet(c, t, order); }
    CurveJet2 operator()(const EvoluteOf& e) const { return evolute_jet(*e.base, t, order); }
};

double speed(const CurveJet2& j) { return std::hypot(j.x[1], j.y[1]); }

} // namespace

PlaneCurve::PlaneCurve(CurveFamily family, Interval domain, bool closed)
    : family_(std::move(family)), domain_(domain), closed_(closed)
{
    if (!(domain.hi > domain.lo) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi))
        throw Error(ErrorKind::Usage, "curve domain must be a finite interval with t0 < t1");

    if (const auto* e = std::get_if<Ellipse>(&family_); e && !(e->a > 0.0 && e->b > 0.0))
        throw Error(ErrorKind::Usage, "ellipse semi-axes must be positive");
    if (const auto* p = std::get_if<PolynomialGraph>(&family_); p && p->coeffs.empty())
        throw Error(ErrorKind::Usage, "polynomial graph needs coefficients");
    if (const auto* f = std::get_if<FourierOval>(&family_)) {
        double total = 0.0;
        for (double v : f->cos_coeffs)
            total += std::abs(v);
        for (double v : f->sin_coeffs)
            total += std::abs(v);
        if (total > 0.2)
            throw Error(ErrorKind::Usage, "Fourier oval perturbation exceeds sum |coeff| <= 0.2");
    }
    if (const auto* e = std::get_if<EvoluteOf>(&family_); e && !e->base)
        throw Error(ErrorKind::Usage, "evolute needs a base curve");

    // Evolutes have cusps at vertices, so regularity is only required of primary curves.
    if (!std::holds_alternative<EvoluteOf>(family_)) {
        constexpr int kGrid = 256;
        for (int i = 0; i <= kGrid; ++i) {
            const double t = domain_.lo + domain_.length() * i / kGrid;
            if (!(speed(jet_unchecked(t, 1)) > 1e-12))
                throw Error(ErrorKind::Singularity, "curve is not regular at t = " + std::to_string(t));
        }
    }
    if (std::holds_alternative<FourierOval>(family_)) {
        constexpr int kGrid = 512;
        for (int i = 0; i < kGrid; ++i) {
            const double t = domain_.lo + domain_.length() * i / kGrid;
            const CurveJet2 j = jet_unchecked(t, 2);
            if (!(j.x[1] * j.y[2] - j.y[1] * j.x[2] > 0.0))
                throw Error(ErrorKind::Usage, "Fourier oval is not strictly convex");
        }
    }
    if (closed_) {
        const CurveJet2 a = jet_unchecked(domain_.lo, kMaxJetOrder);
        const CurveJet2 b = jet_unchecked(domain_.hi, kMaxJetOrder);
        for (int i = 0; i <= kMaxJetOrder; ++i) {
            const double tx = 1e-9 * std::max({1.0, std::abs(a.x[i]), std::abs(b.x[i])});
            const double ty = 1e-9 * std::max({1.0, std::abs(a.y[i]), std::abs(b.y[i])});
            if (std::abs(a.x[i] - b.x[i]) > tx || std::abs(a.y[i] - b.y[i]) > ty)
                throw Error(ErrorKind::Usage, "curve marked closed but jets differ at the domain ends");
        }
    }
}

PlaneCurve PlaneCurve::ellipse(double a, double b) { return PlaneCurve(Ellipse{a, b}, {0.0, kTwoPi}, true); }

PlaneCurve PlaneCurve::ellipse_arc(double a, double b, Interval domain)
{
    return PlaneCurve(Ellipse{a, b}, domain, false);
}

PlaneCurve PlaneCurve::log_spiral(double growth, Interval domain)
{
    return PlaneCurve(LogSpiral{growth}, domain, false);
}

PlaneCurve PlaneCurve::polynomial_graph(std::vector<double> coeffs, Interval domain)
{
    return PlaneCurve(PolynomialGraph{std::move(coeffs)}, domain, false);
}

PlaneCurve PlaneCurve::fourier_oval(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
{
    return PlaneCurve(FourierOval{std::move(cos_coeffs), std::move(sin_coeffs)}, {0.0, kTwoPi}, true);
}

PlaneCurve PlaneCurve::cubic_oval_arc(const std::array<double, 10>& coeffs, Point center, Interval domain)
{
    const bool full = std::abs(domain.length() - kTwoPi) < 1e-12;
    return PlaneCurve(CubicOvalArc{coeffs, center}, domain, full);
}

PlaneCurve PlaneCurve::evolute_of(const PlaneCurve& base, Interval domain)
{
    if (!base.domain().contains(domain.lo, 1e-12) || !base.domain().contains(domain.hi, 1e-12))
        throw Error(ErrorKind::Domain, "evolute domain must lie inside the base curve's domain");
    return PlaneCurve(EvoluteOf{std::make_shared<const PlaneCurve>(base)}, domain, false);
}

std::string PlaneCurve::family_name() const
{
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Ellipse>)
                return "ellipse";
            else if constexpr (std::is_same_v<T, LogSpiral>)
                return "logspiral";
            else if constexpr (std::is_same_v<T, PolynomialGraph>)
                return "polynomial_graph";
            else if constexpr (std::is_same_v<T, FourierOval>)
                return "fourier_oval";
            else if constexpr (std::is_same_v<T, CubicOvalArc>)
                return "cubic_oval_arc";
            else
                return "evolute";
        },
        family_);
}

CurveJet2 PlaneCurve::jet_unchecked(double t, int order) const
{
    if (order < 0 || order > kMaxJetOrder)
        throw Error(ErrorKind::Usage, "curve jet order must be in [0, 10]");
    return std::visit(JetVisitor{t, order}, family_);
}

CurveJet2 PlaneCurve::jet(double t, int order) const
{
    const double slack = 1e-12 * std::max(1.0, domain_.length());
    if (!domain_.contains(t, slack))
        throw Error(ErrorKind::Domain, "parameter " + std::to_string(t) + " outside curve domain");
    return jet_unchecked(t, order);
}

Point PlaneCurve::point(double t) const { return jet(t, 0).position(); }

CurveJet2 evaluate_jet(const PlaneCurve& c, double t, int order) { return c.jet(t, order); }

double curvature(const PlaneCurve& c, double t)
{
    const CurveJet2 j = c.jet(t, 2);
    const Vec2 d1 = j.derivative(1);
    const Vec2 d2 = j.derivative(2);
    const double v = norm(d1);
    if (v < 1e-12)
        throw Error(ErrorKind::Singularity, "curvature undefined where |gamma'| < 1e-12");
    return cross(d1, d2) / (v * v * v);
}

Jet curvature_jet(const PlaneCurve& c, double t, int order)
{
    const CurveJet2 j = c.jet(t, order + 2);
    const Jet dx = jet_derivative(j.x);
    const Jet dy = jet_derivative(j.y);
    const Jet ddx = jet_derivative(dx);
    const Jet ddy = jet_derivative(dy);
    const Jet dxo = dx.truncated(order), dyo = dy.truncated(order);
    const Jet s2 = dxo * dxo + dyo * dyo;
    if (std::sqrt(s2.value()) < 1e-12)
        throw Error(ErrorKind::Singularity, "curvature undefined where |gamma'| < 1e-12");
    return (dxo * ddy - dyo * ddx) / (s2 * sqrt(s2));
}

std::vector<Vertex> find_vertices(const PlaneCurve& c, int grid_n)
{
    if (grid_n < 16)
        throw Error(ErrorKind::Usage, "vertex scan needs grid_n >= 16");
    const Interval dom = c.domain();
    const double h = dom.length() / grid_n;
    auto kprime = [&](double t) { return curvature_jet(c, t, 1)[1]; };

    std::vector<double> ts(static_cast<std::size_t>(grid_n) + 1), vs(ts.size());
    double kmax = 0.0;
    for (int i = 0; i <= grid_n; ++i) {
        ts[i] = (i == grid_n) ? dom.hi : dom.lo + h * i;
        const Jet k = curvature_jet(c, ts[i], 1);
        vs[i] = k[1];
        kmax = std::max(kmax, std::abs(k[0]));
    }
    const double flat = 1e-11 * std::max(kmax, 1e-300);

    std::vector<Vertex> out;
    auto push = [&](double t) {
        const Jet k = curvature_jet(c, t, 2);
        out.push_back({t, std::abs(k.derivative(2)) < 1e-8});
    };
    for (int i = 0; i < grid_n; ++i) {
        double a = ts[i], b = ts[i + 1];
        double fa = vs[i], fb = vs[i + 1];
        if (std::abs(fa) <= flat && std::abs(fb) <= flat && std::abs(kprime(0.5 * (a + b))) <= flat)
            throw Error(ErrorKind::DegenerateFamily,
                        "curvature is constant on a scan cell; vertices are not isolated");
        if (fa == 0.0) {
            push(a);
            continue;
        }
        if (fa * fb >= 0.0)
            continue;
        while (b - a >= 1e-10) {
            const double m = 0.5 * (a + b);
            const double fm = kprime(m);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if ((fm > 0.0) == (fa > 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        push(0.5 * (a + b));
    }
    if (!c.closed() && vs[static_cast<std::size_t>(grid_n)] == 0.0)
        push(dom.hi);

    if (c.closed()) {
        // t1 and t0 are the same point on a closed curve.
        for (auto& v : out)
            if (dom.hi - v.t < 1e-9)
                v.t = dom.lo;
        std::sort(out.begin(), out.end(), [](const Vertex& p, const Vertex& q) { return p.t < q.t; });
    }
    std::vector<Vertex> dedup;
    for (const auto& v : out)
        if (dedup.empty() || v.t - dedup.back().t > 1e-9)
            dedup.push_back(v);
    if (c.closed() && dedup.size() > 1 && dedup.front().t - dom.lo < 1e-9 && dom.hi - dedup.back().t < 1e-9)
        dedup.pop_back();
    return dedup;
}

double arc_length(const PlaneCurve& c, double a, double b)
{
    const Interval dom = c.domain();
    const double slack = 1e-12 * std::max(1.0, dom.length());
    if (!dom.contains(a, slack) || !dom.contains(b, slack))
        throw Error(ErrorKind::Domain, "arc length interval outside curve domain");
    if (a == b)
        return 0.0;
    auto speed_at = [&](double t) {
        const double tc = std::clamp(t, dom.lo, dom.hi);
        return speed(c.jet(tc, 1));
    };
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 31>::integrate(speed_at, a, b, 15, 1e-12);
}

Vec2 unit_tangent(const PlaneCurve& c, double t)
{
    const Vec2 d = c.jet(t, 1).derivative(1);
    const double v = norm(d);
    if (v < 1e-12)
        throw Error(ErrorKind::Singularity, "tangent undefined where |gamma'| < 1e-12");
    return (1.0 / v) * d;
}

Vec2 unit_normal(const PlaneCurve& c, double t) { return perp(unit_tangent(c, t)); }

} // namespace osc
