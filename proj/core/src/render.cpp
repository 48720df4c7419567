#include "osculate/render.hpp"

#include "osculate/conic.hpp"
#include "osculate/cubic.hpp"
#include "osculate/error.hpp"
#include "osculate/taylor.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace osc {

std::string_view to_string(ElementKind k) noexcept
{
    switch (k) {
    case ElementKind::Curve: return "curve";
    case ElementKind::Evolute: return "evolute";
    case ElementKind::Circle: return "circle";
    case ElementKind::Conic: return "conic";
    case ElementKind::Oval: return "oval";
    case ElementKind::Graph: return "graph";
    }
    return "curve";
}

Style RenderConfig::style(ElementKind k) noexcept
{
    switch (k) {
    case ElementKind::Curve: return {"#000000", 1.6};
    case ElementKind::Evolute: return {"#d62728", 1.2};
    case ElementKind::Circle: return {"#1f77b4", 0.6};
    case ElementKind::Conic: return {"#2ca02c", 0.6};
    case ElementKind::Oval: return {"#9467bd", 0.6};
    case ElementKind::Graph: return {"#1f77b4", 0.8};
    }
    return {"#000000", 1.0};
}

BBox Element::bbox() const noexcept
{
    if (kind == ElementKind::Circle)
        return {circle.center.x - circle.radius, circle.center.y - circle.radius, circle.center.x + circle.radius,
                circle.center.y + circle.radius};
    return bbox_of(points);
}

Scene& Scene::add_polyline(ElementKind kind, std::vector<Point> pts, bool closed)
{
    if (kind == ElementKind::Circle)
        throw Error(ErrorKind::Usage, "circles are added with add_circle");
    Element e;
    e.kind = kind;
    e.points = std::move(pts);
    e.closed = closed;
    elements.push_back(std::move(e));
    return *this;
}

Scene& Scene::add_circle(const Circle& c)
{
    Element e;
    e.kind = ElementKind::Circle;
    e.circle = c;
    elements.push_back(std::move(e));
    return *this;
}

BBox Scene::content_bbox() const noexcept
{
    BBox b;
    for (const auto& e : elements)
        b.expand(e.bbox());
    return b;
}

BBox Scene::fitted_viewport() const
{
    const BBox c = content_bbox();
    if (c.empty())
        throw Error(ErrorKind::Usage, "cannot fit a viewport to an empty scene");
    const double side = std::max({c.width(), c.height(), 1e-12}) * (1.0 + 2.0 * RenderConfig::margin);
    const double cx = 0.5 * (c.xmin + c.xmax), cy = 0.5 * (c.ymin + c.ymax);
    return {cx - 0.5 * side, cy - 0.5 * side, cx + 0.5 * side, cy + 0.5 * side};
}

namespace {

// Fixed 6-decimal formatting; tiny negatives print as 0 rather than -0.
std::string num(double v)
{
    if (std::abs(v) < 5e-7)
        v = 0.0;
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6f", v);
    return buf.data();
}

std::string path_data(const Element& e)
{
    std::string d;
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        d += i == 0 ? "M" : " L";
        d += num(e.points[i].x);
        d += ",";
        d += num(e.points[i].y);
    }
    if (e.closed)
        d += " Z";
    return d;
}

} // namespace

std::string render_scene(const Scene& s)
{
    if (s.elements.empty())
        throw Error(ErrorKind::Usage, "nothing to render: the scene is empty");
    const BBox view = s.viewport.value_or(s.fitted_viewport());
    if (!view.encloses(s.content_bbox(), RenderConfig::margin))
        throw Error(ErrorKind::Usage, "viewport must enclose every element with a 5% margin");

    constexpr int W = RenderConfig::width_px, H = RenderConfig::height_px;
    const double scale = std::min(W / view.width(), H / view.height());
    // World (x, y) -> pixel (scale (x - xmin) + ox, H - scale (y - ymin) - oy), centred.
    const double ox = 0.5 * (W - scale * view.width()), oy = 0.5 * (H - scale * view.height());
    const double tx = ox - scale * view.xmin, ty = H - oy + scale * view.ymin;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(W) +
           "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " + std::to_string(W) + " " + std::to_string(H) +
           "\">\n";
    out += "<rect width=\"" + std::to_string(W) + "\" height=\"" + std::to_string(H) + "\" fill=\"#ffffff\"/>\n";
    out += "<g transform=\"matrix(" + num(scale) + " 0 0 " + num(-scale) + " " + num(tx) + " " + num(ty) +
           ")\" fill=\"none\" stroke-linejoin=\"round\">\n";
    for (const auto& e : s.elements) {
        const Style st = RenderConfig::style(e.kind);
        const std::string attrs = "class=\"" + std::string(to_string(e.kind)) + "\" stroke=\"" + st.stroke +
                                  "\" stroke-width=\"" + num(st.width / scale) + "\"";
        if (e.kind == ElementKind::Circle) {
            out += "<circle " + attrs + " cx=\"" + num(e.circle.center.x) + "\" cy=\"" + num(e.circle.center.y) +
                   "\" r=\"" + num(e.circle.radius) + "\"/>\n";
        } else {
            if (e.points.size() < 2)
                continue;
            out += "<path " + attrs + " d=\"" + path_data(e) + "\"/>\n";
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

// --- presets ----------------------------------------------------------------

std::string_view to_string(FigurePreset p) noexcept
{
    switch (p) {
    case FigurePreset::SpiralCircles: return "spiral_circles";
    case FigurePreset::EllipseEvolute: return "ellipse_evolute";
    case FigurePreset::TaylorEven: return "taylor_even";
    case FigurePreset::TaylorOdd: return "taylor_odd";
    case FigurePreset::SpiralConics: return "spiral_conics";
    case FigurePreset::SpiralCubicOvals: return "spiral_cubic_ovals";
    }
    return "spiral_circles";
}

const std::vector<FigurePreset>& all_figure_presets() noexcept
{
    static const std::vector<FigurePreset> all{FigurePreset::SpiralCircles, FigurePreset::EllipseEvolute,
                                               FigurePreset::TaylorEven,    FigurePreset::TaylorOdd,
                                               FigurePreset::SpiralConics,  FigurePreset::SpiralCubicOvals};
    return all;
}

std::optional<FigurePreset> parse_figure_preset(std::string_view name) noexcept
{
    for (FigurePreset p : all_figure_presets())
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

namespace {

using std::numbers::pi;

[[noreturn]] void gate_failed(FigurePreset p, const std::string& why)
{
    throw Error(ErrorKind::VerificationFailed, std::string(to_string(p)) + ": " + why);
}

std::string describe(const NestingReport& r)
{
    if (r.failure)
        return r.failure->reason + " at t = " + std::to_string(r.failure->t);
    return "not all pairs nested (" + std::to_string(r.count(PairRelation::Intersecting)) + " intersecting)";
}

std::vector<Point> sample_curve(const PlaneCurve& c, int n)
{
    std::vector<Point> pts;
    const Interval d = c.domain();
    const int last = c.closed() ? n - 1 : n;
    for (int i = 0; i <= last; ++i)
        pts.push_back(c.point(i == n ? d.hi : d.lo + d.length() * i / n));
    return pts;
}

// Tait-Kneser: the nested circles of a log spiral.
Scene spiral_circles()
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 3 * pi});
    constexpr int n = 40;
    const NestingReport r = verify_tait_kneser(c, n);
    if (!r.passed)
        gate_failed(FigurePreset::SpiralCircles, describe(r));
    Scene s;
    for (double t : r.samples)
        s.add_circle(osculating_circle(c, t));
    s.add_polyline(ElementKind::Curve, sample_curve(c, 2000));
    return s;
}

Scene ellipse_evolute()
{
    const PlaneCurve c = PlaneCurve::ellipse(2.0, 1.0);
    const auto vs = find_vertices(c);
    if (vs.size() != 4)
        gate_failed(FigurePreset::EllipseEvolute, std::to_string(vs.size()) + " vertices instead of 4");
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (std::abs(vs[i].t - pi / 2 * static_cast<double>(i)) > 1e-8)
            gate_failed(FigurePreset::EllipseEvolute, "vertex away from a multiple of pi/2");
    if (std::abs(evolute_signed_length(c)) > 1e-6)
        gate_failed(FigurePreset::EllipseEvolute, "signed evolute length is not zero");
    Scene s;
    s.add_polyline(ElementKind::Curve, sample_curve(c, 1024), true);
    // 2048 steps include the four cusps t = k pi / 2.
    std::vector<Point> ev;
    for (int i = 0; i < 2048; ++i)
        ev.push_back(evolute_point(c, 2 * pi * i / 2048));
    s.add_polyline(ElementKind::Evolute, std::move(ev), true);
    return s;
}

Scene taylor_family(FigurePreset p)
{
    const bool even = p == FigurePreset::TaylorEven;
    const SmoothFunction f = SmoothFunction::monomial(even ? 3 : 4);
    const int n = even ? 2 : 3;
    const Interval I{-1.0, 1.0};
    TaylorOptions opts;
    opts.n_samples = 9;
    const TaylorReport r = even ? verify_disjoint_even(f, I, n, opts) : verify_disjoint_odd(f, I, n, opts);
    if (!r.passed)
        gate_failed(p, r.failure ? r.failure->reason : "Taylor graphs meet");
    const double ylo = even ? -2.0 : -1.0, yhi = even ? 2.0 : 3.0;
    Scene s;
    for (const auto& run : clipped_graph([&](double x) { return f(x); }, -1.5, 1.5, 600, ylo, yhi))
        s.add_polyline(ElementKind::Curve, run);
    for (double t : r.samples) {
        const TaylorPoly T = taylor_poly(f, t, n);
        for (const auto& run : clipped_graph(T, -1.5, 1.5, 600, ylo, yhi))
            s.add_polyline(ElementKind::Graph, run);
    }
    return s;
}

Scene spiral_conics()
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 2 * pi});
    constexpr int n = 16;
    const NestingReport r = verify_conic_nesting(c, n);
    if (!r.passed)
        gate_failed(FigurePreset::SpiralConics, describe(r));
    Scene s;
    s.add_polyline(ElementKind::Curve, sample_curve(c, 2000));
    const BBox base = s.content_bbox();
    const double cx = 0.5 * (base.xmin + base.xmax), cy = 0.5 * (base.ymin + base.ymax);
    const double half = 1.5 * std::max(base.width(), base.height());
    const BBox region{cx - half, cy - half, cx + half, cy + half};
    for (double t : r.samples) {
        const Conic k = osculating_conic(c, t);
        for (auto& contour : zero_contours([&k](Point p) { return k(p); }, region, 1024))
            if (contour.points.size() > 1)
                s.add_polyline(ElementKind::Conic, std::move(contour.points), contour.closed);
    }
    return s;
}

Scene spiral_cubic_ovals()
{
    // Parameters from search_spiral_oval_preset; the search itself is the gate.
    const auto preset = search_spiral_oval_preset({0.2}, {pi}, 16);
    if (!preset)
        gate_failed(FigurePreset::SpiralCubicOvals, "osculating cubic ovals are not nested");
    const PlaneCurve c = PlaneCurve::log_spiral(preset->growth, preset->domain);
    Scene s;
    for (auto& o : osculating_ovals(c, preset->samples, preset->box, preset->resolution))
        s.add_polyline(ElementKind::Oval, o->polyline(), true);
    s.add_polyline(ElementKind::Curve, sample_curve(c, 1000));
    return s;
}

} // namespace

Scene figure_preset(FigurePreset p)
{
    switch (p) {
    case FigurePreset::SpiralCircles: return spiral_circles();
    case FigurePreset::EllipseEvolute: return ellipse_evolute();
    case FigurePreset::TaylorEven:
    case FigurePreset::TaylorOdd: return taylor_family(p);
    case FigurePreset::SpiralConics: return spiral_conics();
    case FigurePreset::SpiralCubicOvals: return spiral_cubic_ovals();
    }
    throw Error(ErrorKind::Usage, "unknown figure preset");
}

} // namespace osc
