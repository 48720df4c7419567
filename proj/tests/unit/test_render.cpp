#include "osculate/conic.hpp"
#include "osculate/cubic.hpp"
#include "osculate/error.hpp"
#include "osculate/render.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

using namespace osc;
using std::numbers::pi;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

double pixel_size(const Scene& s) { return s.fitted_viewport().width() / RenderConfig::width_px; }

} // namespace

TEST(RenderScene, EmptySceneIsAnError)
{
    try {
        render_scene(Scene{});
        FAIL() << "expected usage error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Usage);
    }
}

TEST(RenderScene, UnitCircle)
{
    Scene s;
    s.add_circle({{0.0, 0.0}, 1.0});
    const std::string svg = render_scene(s);
    EXPECT_EQ(occurrences(svg, "<circle"), 1u);
    EXPECT_NE(svg.find("r=\"1.000000\""), std::string::npos);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("width=\"800\" height=\"800\""), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(RenderScene, ElementCountsMatchInput)
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 3 * pi});
    Scene s;
    for (int i = 0; i < 100; ++i)
        s.add_circle(osculating_circle(c, 3 * pi * i / 99));
    std::vector<Point> pts;
    for (int i = 0; i <= 500; ++i)
        pts.push_back(c.point(3 * pi * i / 500));
    s.add_polyline(ElementKind::Curve, pts);
    const std::string svg = render_scene(s);
    EXPECT_EQ(occurrences(svg, "<circle"), 100u);
    EXPECT_EQ(occurrences(svg, "<path"), 1u);
}

TEST(RenderScene, IdenticalScenesGiveIdenticalBytes)
{
    Scene s;
    s.add_circle({{0.3, -0.2}, 1.5});
    s.add_polyline(ElementKind::Conic, {{0, 0}, {1, 0.5}, {2, -0.25}}, true);
    EXPECT_EQ(render_scene(s), render_scene(s));
}

TEST(RenderScene, ViewportMustKeepMargin)
{
    Scene s;
    s.add_circle({{0.0, 0.0}, 1.0});
    s.viewport = BBox{-1.01, -1.01, 1.01, 1.01};
    EXPECT_THROW(render_scene(s), Error);
    s.viewport = BBox{-1.2, -1.2, 1.2, 1.2};
    EXPECT_NO_THROW(render_scene(s));
    EXPECT_TRUE(s.fitted_viewport().encloses(s.content_bbox(), RenderConfig::margin));
}

TEST(ClippedGraph, SplitsAtTheClipLines)
{
    const auto runs = clipped_graph([](double x) { return x; }, -2.0, 2.0, 400, -1.0, 1.0);
    ASSERT_EQ(runs.size(), 1u);
    EXPECT_NEAR(runs[0].front().x, -1.0, 1e-12);
    EXPECT_NEAR(runs[0].back().y, 1.0, 1e-12);
    const auto two = clipped_graph([](double x) { return x * x - 2.0; }, -2.0, 2.0, 400, -3.0, 1.0);
    EXPECT_EQ(two.size(), 1u);
    const auto parabola = clipped_graph([](double x) { return 2.0 - x * x; }, -2.0, 2.0, 400, -1.0, 1.0);
    EXPECT_EQ(parabola.size(), 2u);
}

TEST(FigurePreset, NamesRoundTrip)
{
    for (FigurePreset p : all_figure_presets())
        EXPECT_EQ(parse_figure_preset(to_string(p)), p);
    EXPECT_FALSE(parse_figure_preset("spiral").has_value());
}

TEST(FigurePreset, MatchesGoldenFiles)
{
    for (FigurePreset p : all_figure_presets()) {
        const std::string name(to_string(p));
        const std::string golden = read_file(std::string(OSCULATE_TEST_DIR) + "/golden/" + name + ".svg");
        ASSERT_FALSE(golden.empty()) << name;
        EXPECT_EQ(render_scene(figure_preset(p)), golden) << name;
    }
}

TEST(FigurePreset, SpiralCirclesAreNested)
{
    const Scene s = figure_preset(FigurePreset::SpiralCircles);
    std::vector<Circle> circles;
    for (const auto& e : s.elements)
        if (e.kind == ElementKind::Circle)
            circles.push_back(e.circle);
    ASSERT_EQ(circles.size(), 40u);
    for (std::size_t i = 0; i + 1 < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j)
            EXPECT_LT(distance(circles[i].center, circles[j].center), circles[j].radius - circles[i].radius);
}

TEST(FigurePreset, EllipseEvoluteHasCuspsAtVertices)
{
    const Scene s = figure_preset(FigurePreset::EllipseEvolute);
    const Element* ev = nullptr;
    for (const auto& e : s.elements)
        if (e.kind == ElementKind::Evolute)
            ev = &e;
    ASSERT_NE(ev, nullptr);
    ASSERT_EQ(ev->points.size(), 2048u);
    // Astroid of Ellipse(2, 1): cusps (+-3/2, 0) and (0, -+3).
    const Point cusps[4] = {{1.5, 0.0}, {0.0, -3.0}, {-1.5, 0.0}, {0.0, 3.0}};
    for (int k = 0; k < 4; ++k)
        EXPECT_LT(distance(ev->points[static_cast<std::size_t>(512 * k)], cusps[k]), 1e-12);
}

TEST(FigurePreset, TaylorGraphsDoNotCross)
{
    for (FigurePreset p : {FigurePreset::TaylorEven, FigurePreset::TaylorOdd}) {
        const Scene s = figure_preset(p);
        std::vector<std::map<double, double>> graphs;
        for (const auto& e : s.elements)
            if (e.kind == ElementKind::Graph) {
                std::map<double, double> g;
                // Interior vertices sit on the shared x grid; clipped ends do not.
                for (std::size_t i = 1; i + 1 < e.points.size(); ++i)
                    g[e.points[i].x] = e.points[i].y;
                graphs.push_back(std::move(g));
            }
        ASSERT_GE(graphs.size(), 9u);
        for (std::size_t a = 0; a < graphs.size(); ++a)
            for (std::size_t b = a + 1; b < graphs.size(); ++b) {
                int sign = 0;
                bool ok = true;
                for (const auto& [x, y] : graphs[a]) {
                    const auto it = graphs[b].find(x);
                    if (it == graphs[b].end() || y == it->second)
                        continue;
                    const int sg = y > it->second ? 1 : -1;
                    // The odd family only has to stay apart to the right of the later base point.
                    if (sign != 0 && sg != sign && p == FigurePreset::TaylorEven)
                        ok = false;
                    sign = sign == 0 ? sg : sign;
                }
                EXPECT_TRUE(ok) << to_string(p) << " graphs " << a << ", " << b;
            }
    }
}

TEST(FigurePreset, ConicPolylinesStayWithinAPixel)
{
    const Scene s = figure_preset(FigurePreset::SpiralConics);
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 2 * pi});
    std::vector<Conic> conics;
    for (int i = 0; i < 16; ++i)
        conics.push_back(osculating_conic(c, i == 15 ? 2 * pi : 2 * pi * i / 15));
    const double px = pixel_size(s);
    int checked = 0;
    for (const auto& e : s.elements) {
        if (e.kind != ElementKind::Conic)
            continue;
        for (std::size_t i = 0; i + 1 < e.points.size(); i += 7) {
            const Point m = 0.5 * (e.points[i] + e.points[i + 1]);
            double best = INFINITY;
            for (const auto& k : conics)
                best = std::min(best, std::abs(k(m)) / norm(k.gradient(m)));
            EXPECT_LT(best, px);
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(FigurePreset, OvalPolylinesStayWithinAPixel)
{
    const Scene s = figure_preset(FigurePreset::SpiralCubicOvals);
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, pi});
    std::vector<Cubic> cubics;
    for (int i = 0; i < 16; ++i)
        cubics.push_back(osculating_cubic(c, i == 15 ? pi : pi * i / 15));
    const double px = pixel_size(s);
    std::size_t ovals = 0, k = 0;
    for (const auto& e : s.elements) {
        if (e.kind != ElementKind::Oval)
            continue;
        ++ovals;
        const Cubic& cub = cubics[k++];
        for (std::size_t i = 0; i < e.points.size(); i += 5) {
            const Point m = 0.5 * (e.points[i] + e.points[(i + 1) % e.points.size()]);
            EXPECT_LT(std::abs(cub(m)) / norm(cub.gradient(m)), px);
        }
    }
    EXPECT_EQ(ovals, 16u);
}
