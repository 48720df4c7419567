#pragma once

// Osculating cubic curves, their ovals, and nesting of ovals.
//
// Zero sets are extracted by marching squares and all oval geometry
// (crossings, containment) is decided on the resulting polylines.

#include "osculate/curve.hpp"
#include "osculate/implicit.hpp"
#include "osculate/report.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace osc {

/// Ternary cubic in graded monomial order
///   1 | x y | x^2 xy y^2 | x^3 x^2y xy^2 y^3,
/// unit Euclidean norm.
struct Cubic {
    std::array<double, 10> coeffs{};
    /// The jet conditions do not single out one cubic (e.g. conic times any line).
    bool degenerate = false;
    /// A point designated as inside the oval; F(probe) < 0.
    Point probe;
    /// Jet coefficient 9 of F o gamma for osculating cubics, 0 otherwise.
    double residual = 0.0;
    double relative_residual = 0.0;
    /// sigma_min / sigma_max of the jet-condition matrix.
    double conditioning = 1.0;

    Cubic() = default;
    /// Normalizes; flips the sign so F(probe) < 0 when F(probe) != 0.
    Cubic(const std::array<double, 10>& c, Point probe);

    ImplicitPoly implicit() const;
    double operator()(Point p) const noexcept;
    Vec2 gradient(Point p) const noexcept;
};

/// Unit-norm null vector of the 9 x 10 jet-condition system. A null space
/// of dimension above one sets `degenerate` instead of throwing.
Cubic osculating_cubic(const PlaneCurve& c, double t);

/// Jet coefficient 9 of F_t o gamma at t.
double extactic_cubic_function(const PlaneCurve& c, double t);

/// Simple closed polyline; the closing segment back to the first point is implicit.
class Oval {
public:
    /// Throws InvalidOval on fewer than 3 points or a self-intersection.
    explicit Oval(std::vector<Point> polyline);

    const std::vector<Point>& polyline() const noexcept { return pts_; }
    const BBox& bbox() const noexcept { return box_; }
    /// +1 counter-clockwise, -1 clockwise.
    int orientation() const noexcept { return area_ > 0.0 ? 1 : -1; }
    double area() const noexcept { return std::abs(area_); }
    bool contains(Point p) const noexcept;

private:
    std::vector<Point> pts_;
    BBox box_;
    double area_ = 0.0;
};

struct Contour {
    std::vector<Point> points;
    /// Closed contours do not repeat the first point.
    bool closed = false;
};

/// Marching squares on a resolution x resolution cell grid over `box`,
/// saddle cells decided by the sign at the cell center. Edge crossings are
/// solved on the edge to full precision, so nearly coincident curves keep
/// their order along every grid line.
template <class F>
std::vector<Contour> zero_contours(const F& f, const BBox& box, int resolution);

std::vector<Contour> zero_contours(const ImplicitPoly& f, const BBox& box, int resolution = 512);

/// The closed zero contour of k enclosing `probe`, or none when the
/// component there is unbounded. Throws BboxTooSmall when that component
/// is closed but leaves the box.
std::optional<Oval> extract_oval(const Cubic& k, const BBox& box, int resolution, Point probe);
/// Uses k.probe.
std::optional<Oval> extract_oval(const Cubic& k, const BBox& box, int resolution = 512);

/// Number of proper crossings between the two polylines.
int oval_crossings(const Oval& a, const Oval& b);

/// Intersecting when the polylines cross, otherwise nested or external by point-in-polygon.
PairRelation oval_pair_nested(const Oval& a, const Oval& b);

struct CubicOptions {
    int resolution = 512;
    /// Relative order-9 residual at or below this counts as an extactic point.
    double extactic_zero = 1e-9;
};

/// Osculating cubics at n_samples parameters, each required to have an
/// oval inside `box`; all ovals must be pairwise nested.
NestingReport verify_oval_nesting(const PlaneCurve& c, int n_samples, const BBox& box, const CubicOptions& opts = {});

/// Osculating cubic ovals at the samples of verify_oval_nesting; none where a sample has no oval.
std::vector<std::optional<Oval>> osculating_ovals(const PlaneCurve& c, int n_samples, const BBox& box,
                                                  int resolution = 512);

/// Box around the osculating ovals at both ends of the domain, widened by
/// 10%; searched in a square 8 times the curve's extent. None when either
/// end has no oval there.
std::optional<BBox> fit_oval_box(const PlaneCurve& c, int resolution = 512);

struct SpiralOvalPreset {
    double growth = 0.0;
    Interval domain;
    int samples = 0;
    BBox box;
    int resolution = 512;
};

/// Log spirals e^{g t}(cos t, sin t) on [0, L], tried in the given order
/// (growth outer, length inner): the first whose osculating cubic ovals
/// verify as nested. The box is fitted to the first and last ovals.
std::optional<SpiralOvalPreset> search_spiral_oval_preset(const std::vector<double>& growths,
                                                          const std::vector<double>& lengths, int samples,
                                                          int resolution = 512);

// ---------------------------------------------------------------------------

namespace detail {
std::vector<Contour> march(const std::vector<double>& grid, const std::vector<double>& centers, const BBox& box,
                           int resolution, const std::function<double(Point)>& f);
}

template <class F>
std::vector<Contour> zero_contours(const F& f, const BBox& box, int resolution)
{
    const int n = resolution;
    const double hx = box.width() / n, hy = box.height() / n;
    std::vector<double> grid(static_cast<std::size_t>((n + 1) * (n + 1)));
    std::vector<double> centers(static_cast<std::size_t>(n * n));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            grid[static_cast<std::size_t>(j * (n + 1) + i)] = f(Point{box.xmin + hx * i, box.ymin + hy * j});
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            centers[static_cast<std::size_t>(j * n + i)] = f(Point{box.xmin + hx * (i + 0.5), box.ymin + hy * (j + 0.5)});
    return detail::march(grid, centers, box, n, std::function<double(Point)>(std::cref(f)));
}

} // namespace osc
