#include "osculate/circles.hpp"
#include "osculate/conic.hpp"
#include "osculate/cubic.hpp"
#include "osculate/moebius.hpp"
#include "osculate/render.hpp"
#include "osculate/sampling.hpp"
#include "osculate/taylor.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace osc;
using std::numbers::pi;

static void BM_OsculatingCircle(benchmark::State& state)
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 3 * pi});
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(osculating_circle(c, t));
        t = t > 9.0 ? 0.0 : t + 0.01;
    }
}
BENCHMARK(BM_OsculatingCircle);

static void BM_TaitKneser(benchmark::State& state)
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 3 * pi});
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_tait_kneser(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TaitKneser)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_OsculatingConic(benchmark::State& state)
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 2 * pi});
    for (auto _ : state)
        benchmark::DoNotOptimize(osculating_conic(c, 1.0));
}
BENCHMARK(BM_OsculatingConic);

static void BM_ConicIntersections(benchmark::State& state)
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, 2 * pi});
    const Conic a = osculating_conic(c, 1.0), b = osculating_conic(c, 1.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(conic_intersections(a, b));
}
BENCHMARK(BM_ConicIntersections);

static void BM_OsculatingCubic(benchmark::State& state)
{
    const PlaneCurve c = PlaneCurve::log_spiral(0.2, {0.0, pi});
    for (auto _ : state)
        benchmark::DoNotOptimize(osculating_cubic(c, 1.0));
}
BENCHMARK(BM_OsculatingCubic);

static void BM_ExtractOval(benchmark::State& state)
{
    const Cubic k({0, 1, 0, 0, 0, 1, -1, 0, 0, 0}, {-0.5, 0.0});
    const int res = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_oval(k, {-1.5, -1.5, 1.5, 1.5}, res, {-0.5, 0.0}));
}
BENCHMARK(BM_ExtractOval)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_SextacticScan(benchmark::State& state)
{
    const PlaneCurve o = fourier_oval_batch(1, 1).front();
    for (auto _ : state)
        benchmark::DoNotOptimize(sextactic_scan(o));
}
BENCHMARK(BM_SextacticScan)->Unit(benchmark::kMillisecond);

static void BM_SchwarzianZeros(benchmark::State& state)
{
    const CircleDiffeo f = circle_diffeo_batch(1, 1).front();
    for (auto _ : state)
        benchmark::DoNotOptimize(schwarzian_zero_count(f));
}
BENCHMARK(BM_SchwarzianZeros)->Unit(benchmark::kMillisecond);

static void BM_DisjointEven(benchmark::State& state)
{
    const SmoothFunction f = SmoothFunction::monomial(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_disjoint_even(f, {-1.0, 1.0}, 2));
}
BENCHMARK(BM_DisjointEven)->Unit(benchmark::kMillisecond);

static void BM_RenderPreset(benchmark::State& state)
{
    const Scene s = figure_preset(FigurePreset::SpiralCircles);
    for (auto _ : state)
        benchmark::DoNotOptimize(render_scene(s));
}
BENCHMARK(BM_RenderPreset)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
