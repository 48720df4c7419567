#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace osc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) noexcept { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Vec2, Vec2) noexcept = default;
};

using Point = Vec2;

constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) noexcept { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) noexcept { return norm(a - b); }
/// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 a) noexcept { return {-a.y, a.x}; }

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr double length() const noexcept { return hi - lo; }
    constexpr bool contains(double t, double slack = 0.0) const noexcept { return t >= lo - slack && t <= hi + slack; }
};

struct BBox {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    constexpr bool empty() const noexcept { return xmin > xmax || ymin > ymax; }
    constexpr double width() const noexcept { return xmax - xmin; }
    constexpr double height() const noexcept { return ymax - ymin; }

    void expand(Point p) noexcept
    {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    void expand(const BBox& b) noexcept
    {
        if (b.empty())
            return;
        expand(Point{b.xmin, b.ymin});
        expand(Point{b.xmax, b.ymax});
    }
    constexpr bool contains(Point p) const noexcept
    {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    /// Contains `inner` with at least `margin` * max(width, height) to spare on every side.
    bool encloses(const BBox& inner, double margin) const noexcept
    {
        const double m = margin * std::max(inner.width(), inner.height());
        return xmin <= inner.xmin - m && ymin <= inner.ymin - m && xmax >= inner.xmax + m &&
               ymax >= inner.ymax + m;
    }
};

inline BBox bbox_of(std::span<const Point> pts) noexcept
{
    BBox b;
    for (const auto& p : pts)
        b.expand(p);
    return b;
}

} // namespace osc
