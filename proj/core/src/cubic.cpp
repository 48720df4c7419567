#include "osculate/cubic.hpp"

#include "osculate/error.hpp"
#include "osculate/fit.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

namespace osc {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

bool side(double v) { return v >= 0.0; }

// Proper crossing of segments ab and cd; zero orientations count as positive,
// which keeps crossing counts between closed polylines even.
bool segments_cross(Point a, Point b, Point c, Point d)
{
    return side(cross(b - a, c - a)) != side(cross(b - a, d - a)) &&
           side(cross(d - c, a - c)) != side(cross(d - c, b - c));
}

// Sign of an orientation that is exactly zero, broken by translating the
// second polyline by eps * kShift; a consistent perturbation keeps the
// crossing count between two closed polylines even.
constexpr Vec2 kShift{0.7548776662466927, 0.5698402909980532};

bool side_shifted(double o, double tie) { return o != 0.0 ? o > 0.0 : tie > 0.0; }

// ab on the first polyline, cd on the shifted second one.
bool segments_cross_shifted(Point a, Point b, Point c, Point d)
{
    const Vec2 ab = b - a, cd = d - c;
    return side_shifted(cross(ab, c - a), cross(ab, kShift)) != side_shifted(cross(ab, d - a), cross(ab, kShift)) &&
           side_shifted(cross(cd, a - c), -cross(cd, kShift)) != side_shifted(cross(cd, b - c), -cross(cd, kShift));
}

// Uniform bucket grid over the segments of a closed polyline.
class SegmentIndex {
public:
    SegmentIndex(const std::vector<Point>& pts, const BBox& box) : pts_(pts), box_(box)
    {
        const std::size_t n = pts.size();
        cells_ = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
        buckets_.resize(static_cast<std::size_t>(cells_ * cells_));
        for (std::size_t i = 0; i < n; ++i) {
            const Point a = pts[i], b = pts[(i + 1) % n];
            for_cells(a, b, [&](std::size_t cell) { buckets_[cell].push_back(static_cast<int>(i)); });
        }
        stamp_.assign(n, -1);
    }

    template <class Fn>
    void query(Point a, Point b, Fn&& fn)
    {
        ++epoch_;
        for_cells(a, b, [&](std::size_t cell) {
            for (int j : buckets_[cell]) {
                if (stamp_[static_cast<std::size_t>(j)] == epoch_)
                    continue;
                stamp_[static_cast<std::size_t>(j)] = epoch_;
                fn(j);
            }
        });
    }

    Point start(int j) const { return pts_[static_cast<std::size_t>(j)]; }
    Point end(int j) const { return pts_[(static_cast<std::size_t>(j) + 1) % pts_.size()]; }

private:
    int clamp_cell(double v, double lo, double w) const
    {
        if (!(w > 0.0))
            return 0;
        return std::clamp(static_cast<int>((v - lo) / w * cells_), 0, cells_ - 1);
    }

    template <class Fn>
    void for_cells(Point a, Point b, Fn&& fn) const
    {
        if (std::max(a.x, b.x) < box_.xmin || std::min(a.x, b.x) > box_.xmax || std::max(a.y, b.y) < box_.ymin ||
            std::min(a.y, b.y) > box_.ymax)
            return;
        const int i0 = clamp_cell(std::min(a.x, b.x), box_.xmin, box_.width());
        const int i1 = clamp_cell(std::max(a.x, b.x), box_.xmin, box_.width());
        const int j0 = clamp_cell(std::min(a.y, b.y), box_.ymin, box_.height());
        const int j1 = clamp_cell(std::max(a.y, b.y), box_.ymin, box_.height());
        for (int j = j0; j <= j1; ++j)
            for (int i = i0; i <= i1; ++i)
                fn(static_cast<std::size_t>(j * cells_ + i));
    }

    const std::vector<Point>& pts_;
    BBox box_;
    int cells_ = 1;
    std::vector<std::vector<int>> buckets_;
    std::vector<int> stamp_;
    int epoch_ = 0;
};

double min_distance(const std::vector<Point>& pts, Point p)
{
    double d = std::numeric_limits<double>::infinity();
    for (const Point& q : pts)
        d = std::min(d, distance(p, q));
    return d;
}

// Zero of f on the segment p0 p1, given values of opposite inside/outside class at the ends.
Point edge_root(const std::function<double(Point)>& f, Point p0, double v0, Point p1, double v1)
{
    if (v0 == 0.0)
        return p0;
    if (v1 == 0.0)
        return p1;
    const auto g = [&](double s) { return f(p0 + s * (p1 - p0)); };
    std::uintmax_t iters = 60;
    const auto [lo, hi] = boost::math::tools::toms748_solve(g, 0.0, 1.0, v0, v1,
                                                            boost::math::tools::eps_tolerance<double>(52), iters);
    return p0 + (0.5 * (lo + hi)) * (p1 - p0);
}

BBox widened(const BBox& b, double factor)
{
    const double cx = 0.5 * (b.xmin + b.xmax), cy = 0.5 * (b.ymin + b.ymax);
    const double hw = 0.5 * factor * b.width(), hh = 0.5 * factor * b.height();
    return {cx - hw, cy - hh, cx + hw, cy + hh};
}

// Among closed contours: the smallest one enclosing the probe, else the
// nearest one passing within two cell diagonals of it.
std::optional<Oval> pick_contour(const Cubic& k, const BBox& box, int resolution, Point probe)
{
    const auto contours = zero_contours([&k](Point p) { return k(p); }, box, resolution);
    const double near = 2.0 * std::hypot(box.width(), box.height()) / resolution;
    std::optional<Oval> enclosing, nearest;
    double best_area = std::numeric_limits<double>::infinity();
    double best_dist = near;
    for (const auto& c : contours) {
        if (!c.closed || c.points.size() < 3)
            continue;
        Oval o(c.points);
        if (o.contains(probe)) {
            if (o.area() < best_area) {
                best_area = o.area();
                enclosing = std::move(o);
            }
        } else if (const double d = min_distance(c.points, probe); d <= best_dist) {
            best_dist = d;
            nearest = std::move(o);
        }
    }
    return enclosing ? enclosing : nearest;
}

} // namespace

// --- Cubic ------------------------------------------------------------------

Cubic::Cubic(const std::array<double, 10>& c, Point p) : coeffs(c), probe(p)
{
    double n = 0.0;
    for (double v : c)
        n += v * v;
    n = std::sqrt(n);
    if (!(n > 0.0) || !std::isfinite(n))
        throw Error(ErrorKind::Usage, "cubic needs a nonzero coefficient vector");
    for (double& v : coeffs)
        v /= n;
    if ((*this)(probe) > 0.0)
        for (double& v : coeffs)
            v = -v;
}

ImplicitPoly Cubic::implicit() const { return ImplicitPoly(3, std::vector<double>(coeffs.begin(), coeffs.end())); }

double Cubic::operator()(Point p) const noexcept
{
    const double x = p.x, y = p.y;
    const auto& k = coeffs;
    return k[0] + x * (k[1] + x * (k[3] + x * k[6])) + y * (k[2] + y * (k[5] + y * k[9])) +
           x * y * (k[4] + x * k[7] + y * k[8]);
}

Vec2 Cubic::gradient(Point p) const noexcept
{
    const double x = p.x, y = p.y;
    const auto& k = coeffs;
    return {k[1] + 2.0 * k[3] * x + k[4] * y + 3.0 * k[6] * x * x + 2.0 * k[7] * x * y + k[8] * y * y,
            k[2] + k[4] * x + 2.0 * k[5] * y + k[7] * x * x + 2.0 * k[8] * x * y + 3.0 * k[9] * y * y};
}

Cubic osculating_cubic(const PlaneCurve& c, double t)
{
    const OsculatingFit fit = osculating_fit(c, t, 3);
    std::array<double, 10> k{};
    std::copy(fit.poly.coeffs().begin(), fit.poly.coeffs().end(), k.begin());
    Cubic out(k, fit.probe);
    out.degenerate = fit.degenerate;
    out.residual = fit.residual;
    out.relative_residual = fit.relative_residual;
    out.conditioning = fit.conditioning;
    return out;
}

double extactic_cubic_function(const PlaneCurve& c, double t) { return osculating_fit(c, t, 3).residual; }

// --- Oval -------------------------------------------------------------------

Oval::Oval(std::vector<Point> polyline) : pts_(std::move(polyline))
{
    const std::size_t n = pts_.size();
    if (n < 3)
        throw Error(ErrorKind::InvalidOval, "an oval needs at least 3 vertices");
    box_ = bbox_of(pts_);
    for (std::size_t i = 0; i < n; ++i)
        area_ += cross(pts_[i], pts_[(i + 1) % n]);
    area_ *= 0.5;

    SegmentIndex index(pts_, box_);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = pts_[i], b = pts_[(i + 1) % n];
        bool bad = false;
        index.query(a, b, [&](int jj) {
            const auto j = static_cast<std::size_t>(jj);
            if (j <= i || j == i + 1 || (i == 0 && j == n - 1))
                return;
            bad = bad || segments_cross(a, b, index.start(jj), index.end(jj));
        });
        if (bad)
            throw Error(ErrorKind::InvalidOval, "polyline intersects itself at vertex " + std::to_string(i));
    }
}

bool Oval::contains(Point p) const noexcept
{
    if (!box_.contains(p))
        return false;
    bool inside = false;
    const std::size_t n = pts_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = pts_[i], b = pts_[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x)
                inside = !inside;
        }
    }
    return inside;
}

// --- marching squares -------------------------------------------------------

namespace detail {

std::vector<Contour> march(const std::vector<double>& grid, const std::vector<double>& centers, const BBox& box,
                           int n, const std::function<double(Point)>& f)
{
    if (n < 1)
        throw Error(ErrorKind::Usage, "contour resolution must be positive");
    const double hx = box.width() / n, hy = box.height() / n;
    const auto at = [&](int i, int j) { return grid[static_cast<std::size_t>(j * (n + 1) + i)]; };
    const auto corner = [&](int i, int j) { return Point{box.xmin + hx * i, box.ymin + hy * j}; };

    // Edge keys: 2 * vertex index for the edge to the right, +1 for the edge upward.
    std::unordered_map<long long, int> node_of;
    std::vector<Point> nodes;
    std::vector<std::array<int, 2>> adj;
    const auto node = [&](long long key, Point p0, double v0, Point p1, double v1) {
        const auto [it, fresh] = node_of.try_emplace(key, static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back(edge_root(f, p0, v0, p1, v1));
            adj.push_back({-1, -1});
        }
        return it->second;
    };
    const auto link = [&](int a, int b) {
        auto put = [&](int from, int to) {
            auto& slot = adj[static_cast<std::size_t>(from)];
            (slot[0] < 0 ? slot[0] : slot[1]) = to;
        };
        put(a, b);
        put(b, a);
    };

    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double v0 = at(i, j), v1 = at(i + 1, j), v2 = at(i + 1, j + 1), v3 = at(i, j + 1);
            const bool b0 = v0 < 0.0, b1 = v1 < 0.0, b2 = v2 < 0.0, b3 = v3 < 0.0;
            const long long k00 = 2LL * (static_cast<long long>(j) * (n + 1) + i);
            const long long k10 = 2LL * (static_cast<long long>(j) * (n + 1) + i + 1);
            const long long k01 = 2LL * (static_cast<long long>(j + 1) * (n + 1) + i);
            const Point p0 = corner(i, j), p1 = corner(i + 1, j), p2 = corner(i + 1, j + 1), p3 = corner(i, j + 1);
            int e[4] = {-1, -1, -1, -1};  // bottom, right, top, left
            if (b0 != b1)
                e[0] = node(k00, p0, v0, p1, v1);
            if (b1 != b2)
                e[1] = node(k10 + 1, p1, v1, p2, v2);
            if (b3 != b2)
                e[2] = node(k01, p3, v3, p2, v2);
            if (b0 != b3)
                e[3] = node(k00 + 1, p0, v0, p3, v3);
            const int crossed = (e[0] >= 0) + (e[1] >= 0) + (e[2] >= 0) + (e[3] >= 0);
            if (crossed == 2) {
                int a = -1, b = -1;
                for (int q : e)
                    if (q >= 0)
                        (a < 0 ? a : b) = q;
                link(a, b);
            } else if (crossed == 4) {
                const bool center_like_v0 = (centers[static_cast<std::size_t>(j * n + i)] < 0.0) == b0;
                if (center_like_v0) {
                    link(e[0], e[1]);  // cuts off v1
                    link(e[2], e[3]);  // cuts off v3
                } else {
                    link(e[0], e[3]);  // cuts off v0
                    link(e[2], e[1]);  // cuts off v2
                }
            }
        }
    }

    std::vector<Contour> out;
    std::vector<char> seen(nodes.size(), 0);
    const auto walk = [&](int start, bool closed) {
        Contour c;
        c.closed = closed;
        int prev = -1, cur = start;
        while (cur >= 0 && !seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = 1;
            // A zero at a grid corner puts two edge nodes on the same point.
            const Point q = nodes[static_cast<std::size_t>(cur)];
            if (c.points.empty() || !(c.points.back() == q))
                c.points.push_back(q);
            const auto& a = adj[static_cast<std::size_t>(cur)];
            const int next = a[0] != prev ? a[0] : a[1];
            prev = cur;
            cur = next;
        }
        if (closed && c.points.size() > 1 && c.points.front() == c.points.back())
            c.points.pop_back();
        out.push_back(std::move(c));
    };
    // Open contours start at boundary nodes, which have a single neighbour.
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (!seen[k] && adj[k][1] < 0)
            walk(static_cast<int>(k), false);
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (!seen[k])
            walk(static_cast<int>(k), true);
    return out;
}

} // namespace detail

std::vector<Contour> zero_contours(const ImplicitPoly& f, const BBox& box, int resolution)
{
    return zero_contours([&f](Point p) { return f(p); }, box, resolution);
}

// --- ovals ------------------------------------------------------------------

std::optional<Oval> extract_oval(const Cubic& k, const BBox& box, int resolution, Point probe)
{
    if (resolution < 64)
        throw Error(ErrorKind::Usage, "oval extraction needs resolution >= 64");
    if (box.empty() || !(box.width() > 0.0) || !(box.height() > 0.0))
        throw Error(ErrorKind::Usage, "oval extraction needs a non-empty box");
    if (auto o = pick_contour(k, box, resolution, probe))
        return o;
    // Either the component around the probe is unbounded or it leaves the box.
    if (pick_contour(k, widened(box, 4.0), resolution, probe))
        throw Error(ErrorKind::BboxTooSmall, "the oval through the probe leaves the bounding box");
    return std::nullopt;
}

std::optional<Oval> extract_oval(const Cubic& k, const BBox& box, int resolution)
{
    return extract_oval(k, box, resolution, k.probe);
}

int oval_crossings(const Oval& a, const Oval& b)
{
    const BBox& ba = a.bbox();
    const BBox& bb = b.bbox();
    if (ba.xmax < bb.xmin || bb.xmax < ba.xmin || ba.ymax < bb.ymin || bb.ymax < ba.ymin)
        return 0;
    SegmentIndex index(b.polyline(), bb);
    const auto& pa = a.polyline();
    int count = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const Point p = pa[i], q = pa[(i + 1) % pa.size()];
        index.query(p, q, [&](int j) { count += segments_cross_shifted(p, q, index.start(j), index.end(j)); });
    }
    return count;
}

PairRelation oval_pair_nested(const Oval& a, const Oval& b)
{
    if (oval_crossings(a, b) > 0)
        return PairRelation::Intersecting;
    if (b.contains(a.polyline().front()))
        return PairRelation::NestedFirstInsideSecond;
    if (a.contains(b.polyline().front()))
        return PairRelation::NestedSecondInsideFirst;
    return PairRelation::DisjointExternal;
}

// --- oval nesting -----------------------------------------------------------

namespace {

std::vector<double> sample_grid(Interval dom, int n)
{
    std::vector<double> ts;
    for (int i = 0; i < n; ++i)
        ts.push_back(n == 1 ? dom.lo : (i == n - 1 ? dom.hi : dom.lo + dom.length() * i / (n - 1)));
    return ts;
}

} // namespace

std::vector<std::optional<Oval>> osculating_ovals(const PlaneCurve& c, int n_samples, const BBox& box,
                                                  int resolution)
{
    std::vector<std::optional<Oval>> out;
    for (double t : sample_grid(c.domain(), n_samples))
        out.push_back(extract_oval(osculating_cubic(c, t), box, resolution));
    return out;
}

NestingReport verify_oval_nesting(const PlaneCurve& c, int n_samples, const BBox& box, const CubicOptions& opts)
{
    if (n_samples < 1)
        throw Error(ErrorKind::Usage, "need at least one sample");
    NestingReport rep;
    rep.hypothesis_name = "extactic_free";
    rep.worst_margin = std::numeric_limits<double>::quiet_NaN();
    rep.samples = sample_grid(c.domain(), n_samples);

    const auto fail = [&](double t, std::string reason) {
        rep.hypothesis_holds = false;
        rep.failure = HypothesisFailure{t, std::move(reason)};
        rep.passed = false;
        return rep;
    };

    std::vector<Cubic> cubics;
    double min_rel = std::numeric_limits<double>::infinity();
    int s0 = 0;
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const double t = rep.samples[i];
        const Cubic k = osculating_cubic(c, t);
        if (k.degenerate)
            return fail(t, "osculating cubic is not unique");
        if (k.relative_residual <= opts.extactic_zero)
            return fail(t, "extactic point");
        const int s = sgn(k.residual);
        if (s0 != 0 && s != s0) {
            double a = rep.samples[i - 1], b = t;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b);
                if (sgn(extactic_cubic_function(c, m)) == s0)
                    a = m;
                else
                    b = m;
            }
            return fail(0.5 * (a + b), "extactic function changes sign");
        }
        s0 = s;
        min_rel = std::min(min_rel, k.relative_residual);
        cubics.push_back(k);
    }
    rep.metrics["min_relative_extactic"] = min_rel;
    rep.metrics["extactic_sign"] = s0;

    std::vector<Oval> ovals;
    for (std::size_t i = 0; i < cubics.size(); ++i) {
        auto o = extract_oval(cubics[i], box, opts.resolution);
        if (!o)
            return fail(rep.samples[i], "osculating cubic has no oval through the curve point");
        ovals.push_back(std::move(*o));
    }
    rep.hypothesis_holds = true;

    const std::size_t n = ovals.size();
    if (n < 2) {
        rep.degenerate = true;
        rep.passed = true;
        rep.notes.push_back("fewer than two samples; the pairwise claim is vacuous");
        return rep;
    }
    rep.verdicts.assign(n, std::vector<std::optional<PairRelation>>(n));
    bool nested = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const PairRelation r = oval_pair_nested(ovals[i], ovals[j]);
            rep.verdicts[i][j] = r;
            rep.verdicts[j][i] = swapped(r);
            nested = nested && is_nested(r);
        }
    rep.passed = nested;
    return rep;
}

std::optional<BBox> fit_oval_box(const PlaneCurve& c, int resolution)
{
    const Interval d = c.domain();
    BBox extent;
    for (int i = 0; i <= 256; ++i)
        extent.expand(c.point(d.lo + d.length() * i / 256));
    const double half = 4.0 * std::max(extent.width(), extent.height());
    const double cx = 0.5 * (extent.xmin + extent.xmax), cy = 0.5 * (extent.ymin + extent.ymax);
    const BBox wide{cx - half, cy - half, cx + half, cy + half};
    BBox box;
    try {
        for (double t : {d.lo, d.hi}) {
            const auto o = extract_oval(osculating_cubic(c, t), wide, resolution);
            if (!o)
                return std::nullopt;
            box.expand(o->bbox());
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    return widened(box, 1.1);
}

std::optional<SpiralOvalPreset> search_spiral_oval_preset(const std::vector<double>& growths,
                                                          const std::vector<double>& lengths, int samples,
                                                          int resolution)
{
    for (double g : growths) {
        for (double len : lengths) {
            const PlaneCurve spiral = PlaneCurve::log_spiral(g, {0.0, len});
            const auto box = fit_oval_box(spiral, resolution);
            if (box && verify_oval_nesting(spiral, samples, *box, {resolution}).passed)
                return SpiralOvalPreset{g, {0.0, len}, samples, *box, resolution};
        }
    }
    return std::nullopt;
}

} // namespace osc
