#pragma once

// SVG scenes of curves and their osculating families, and the figure presets.

#include "osculate/circles.hpp"
#include "osculate/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

enum class ElementKind { Curve, Evolute, Circle, Conic, Oval, Graph };

std::string_view to_string(ElementKind k) noexcept;

struct Element {
    ElementKind kind = ElementKind::Curve;
    /// Polyline vertices; unused for circles.
    std::vector<Point> points;
    bool closed = false;
    Circle circle;

    BBox bbox() const noexcept;
};

struct Style {
    const char* stroke;
    /// In pixels.
    double width;
};

// Defaults shared by every render.
struct RenderConfig {
    static constexpr int width_px = 800;
    static constexpr int height_px = 800;
    /// Fraction of the content extent left free on every side.
    static constexpr double margin = 0.05;
    static Style style(ElementKind k) noexcept;
};

struct Scene {
    std::vector<Element> elements;
    /// World rectangle mapped onto the canvas; fitted to the elements when unset.
    std::optional<BBox> viewport;

    Scene& add_polyline(ElementKind kind, std::vector<Point> pts, bool closed = false);
    Scene& add_circle(const Circle& c);
    BBox content_bbox() const noexcept;
    /// Square box around the content with RenderConfig::margin to spare.
    BBox fitted_viewport() const;
};

/// SVG 1.1 text. World coordinates with 6 decimals under one y-flipping
/// transform, so a unit circle is written with r="1.000000". Throws Usage
/// on an empty scene or a viewport that does not enclose the content with margin.
std::string render_scene(const Scene& s);

enum class FigurePreset { SpiralCircles, EllipseEvolute, TaylorEven, TaylorOdd, SpiralConics, SpiralCubicOvals };

std::string_view to_string(FigurePreset p) noexcept;
std::optional<FigurePreset> parse_figure_preset(std::string_view name) noexcept;
const std::vector<FigurePreset>& all_figure_presets() noexcept;

/// Builds the preset's scene after its family passes the matching
/// verification; throws VerificationFailed otherwise.
Scene figure_preset(FigurePreset p);

/// Points (x, f(x)) on n + 1 equally spaced x, split into runs where
/// ylo <= f <= yhi; run ends are interpolated onto the clipping lines.
template <class F>
std::vector<std::vector<Point>> clipped_graph(const F& f, double x0, double x1, int n, double ylo, double yhi);

// ---------------------------------------------------------------------------

template <class F>
std::vector<std::vector<Point>> clipped_graph(const F& f, double x0, double x1, int n, double ylo, double yhi)
{
    std::vector<std::vector<Point>> runs;
    std::vector<Point> cur;
    const auto inside = [&](double y) { return y >= ylo && y <= yhi; };
    const auto cut = [&](Point a, Point b) {
        const double edge = (b.y > yhi || a.y > yhi) ? yhi : ylo;
        const double s = (edge - a.y) / (b.y - a.y);
        return Point{a.x + s * (b.x - a.x), edge};
    };
    Point prev{};
    for (int i = 0; i <= n; ++i) {
        const double x = i == n ? x1 : x0 + (x1 - x0) * i / n;
        const Point p{x, f(x)};
        if (i > 0 && inside(p.y) != inside(prev.y)) {
            if (inside(prev.y)) {
                cur.push_back(cut(prev, p));
                runs.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(cut(p, prev));
            }
        }
        if (inside(p.y))
            cur.push_back(p);
        prev = p;
    }
    if (cur.size() > 1)
        runs.push_back(std::move(cur));
    return runs;
}

} // namespace osc
