// osculate: verify, scan, figure and report from the command line.
//
// Exit codes: 0 pass, 1 usage, 2 hypothesis or check failure.

#include "osculate/circles.hpp"
#include "osculate/conic.hpp"
#include "osculate/cubic.hpp"
#include "osculate/curve.hpp"
#include "osculate/error.hpp"
#include "osculate/io.hpp"
#include "osculate/moebius.hpp"
#include "osculate/render.hpp"
#include "osculate/sampling.hpp"
#include "osculate/taylor.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace osc;

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;

struct Common {
    std::string curve;
    std::optional<int> samples;
    std::uint64_t seed = 1;
    std::string out;
    std::optional<double> tol;
    int resolution = 512;
    std::optional<int> degree;
    std::optional<int> count;
    std::vector<double> bbox;
};

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::Usage, "cannot write " + path);
    f << text;
}

Json require_spec(const Common& o)
{
    if (o.curve.empty())
        throw Error(ErrorKind::Usage, "--curve is required");
    return load_json_file(o.curve);
}

int samples_or(const Common& o, int fallback)
{
    const int n = o.samples.value_or(fallback);
    if (n < 1 || n > 100000)
        throw Error(ErrorKind::Usage, "--samples must be in [1, 100000]");
    return n;
}

Interval function_domain(const FunctionSpec& spec)
{
    if (!spec.domain)
        throw Error(ErrorKind::Usage, "the function spec needs a \"domain\" interval");
    return *spec.domain;
}

int finish(const NestingReport& r, const Common& o)
{
    write_output(o.out, dump(report_to_json(r)));
    if (r.failure)
        std::cerr << "hypothesis failed at t = " << r.failure->t << ": " << r.failure->reason << "\n";
    else if (!r.passed)
        std::cerr << "check failed: " << r.count(PairRelation::Intersecting) << " intersecting pairs\n";
    return r.passed ? kPass : kFail;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& theorem, const Common& o)
{
    if (theorem == "tait_kneser") {
        TaitKneserOptions opts;
        if (o.tol)
            opts.string_tol = *o.tol;
        return finish(verify_tait_kneser(curve_from_json(require_spec(o)), samples_or(o, 100), opts), o);
    }
    if (theorem == "taylor_even" || theorem == "taylor_odd") {
        const bool even = theorem == "taylor_even";
        const FunctionSpec spec = function_from_json(require_spec(o));
        TaylorOptions opts;
        opts.n_samples = samples_or(o, 20);
        const int n = o.degree.value_or(even ? 2 : 3);
        const TaylorReport r = even ? verify_disjoint_even(spec.f, function_domain(spec), n, opts)
                                    : verify_disjoint_odd(spec.f, function_domain(spec), n, opts);
        write_output(o.out, dump(report_to_json(r)));
        if (r.failure)
            std::cerr << "hypothesis failed at x = " << r.failure->t << ": " << r.failure->reason << "\n";
        return r.passed ? kPass : kFail;
    }
    if (theorem == "conics") {
        ConicOptions opts;
        if (o.tol)
            opts.sextactic_zero = *o.tol;
        return finish(verify_conic_nesting(curve_from_json(require_spec(o)), samples_or(o, 40), opts), o);
    }
    if (theorem == "moebius") {
        const FunctionSpec spec = function_from_json(require_spec(o));
        return finish(verify_moebius_nesting(spec.f, function_domain(spec), samples_or(o, 30)), o);
    }
    if (theorem == "cubic_ovals") {
        const PlaneCurve c = curve_from_json(require_spec(o));
        CubicOptions opts;
        opts.resolution = o.resolution;
        if (o.tol)
            opts.extactic_zero = *o.tol;
        BBox box;
        if (!o.bbox.empty()) {
            if (o.bbox.size() != 4)
                throw Error(ErrorKind::Usage, "--bbox takes xmin,ymin,xmax,ymax");
            box = {o.bbox[0], o.bbox[1], o.bbox[2], o.bbox[3]};
        } else if (auto fitted = fit_oval_box(c, o.resolution)) {
            box = *fitted;
        } else {
            NestingReport r;
            r.hypothesis_name = "extactic_free";
            r.worst_margin = std::nan("");
            r.failure = HypothesisFailure{c.domain().lo, "no oval at an end of the arc"};
            return finish(r, o);
        }
        return finish(verify_oval_nesting(c, samples_or(o, 16), box, opts), o);
    }
    throw Error(ErrorKind::Usage, "unknown theorem \"" + theorem + "\"");
}

// --- scan -------------------------------------------------------------------

std::string join_numbers(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ";" : "") + csv_number(v[i]);
    return s;
}

std::vector<PlaneCurve> scan_curves(const Common& o)
{
    if (!o.curve.empty())
        return {curve_from_json(load_json_file(o.curve))};
    return fourier_oval_batch(o.seed, o.count.value_or(100));
}

int cmd_scan(const std::string& kind, const Common& o)
{
    if (o.count && (*o.count < 1 || *o.count > 100000))
        throw Error(ErrorKind::Usage, "--count must be in [1, 100000]");
    std::string csv;
    bool ok = true;
    if (kind == "vertices" || kind == "sextactic") {
        const bool vertices = kind == "vertices";
        const int bound = vertices ? 4 : 6;
        csv = "instance,count,closed,roots\n";
        const auto curves = scan_curves(o);
        for (std::size_t i = 0; i < curves.size(); ++i) {
            std::vector<double> roots;
            if (vertices)
                for (const auto& v : find_vertices(curves[i]))
                    roots.push_back(v.t);
            else
                roots = sextactic_scan(curves[i]).roots;
            const int n = static_cast<int>(roots.size());
            if (curves[i].closed())
                ok = ok && n >= bound && n % 2 == 0;
            csv += std::to_string(i) + "," + std::to_string(n) + "," + (curves[i].closed() ? "true" : "false") + "," +
                   join_numbers(roots) + "\n";
        }
    } else if (kind == "schwarzian_zeros") {
        std::vector<CircleDiffeo> fs;
        if (!o.curve.empty())
            fs.push_back(circle_diffeo_from_json(load_json_file(o.curve)));
        else
            fs = circle_diffeo_batch(o.seed, o.count.value_or(100));
        csv = "instance,count,degenerate,zeros\n";
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const SchwarzianZeros z = schwarzian_zero_count(fs[i]);
            ok = ok && !z.degenerate && z.count() >= 4 && z.count() % 2 == 0;
            csv += std::to_string(i) + "," + std::to_string(z.count()) + "," + (z.degenerate ? "true" : "false") +
                   "," + join_numbers(z.zeros) + "\n";
        }
    } else if (kind == "derivative_zeros") {
        SmoothFunction f = SmoothFunction::gaussian();
        if (!o.curve.empty())
            f = function_from_json(load_json_file(o.curve)).f;
        std::vector<int> orders;
        if (o.degree)
            orders.push_back(*o.degree);
        else
            for (int n = 1; n <= 8; ++n)
                orders.push_back(n);
        csv = "n,count,expected,window_warning,zeros\n";
        for (int n : orders) {
            const DerivativeZeros z = count_derivative_zeros(f, n, {-8.0, 8.0});
            ok = ok && z.count() == n && !z.window_warning;
            csv += std::to_string(n) + "," + std::to_string(z.count()) + "," + std::to_string(n) + "," +
                   (z.window_warning ? "true" : "false") + "," + join_numbers(z.zeros) + "\n";
        }
    } else {
        throw Error(ErrorKind::Usage, "unknown scan kind \"" + kind + "\"");
    }
    write_output(o.out, csv);
    if (!ok)
        std::cerr << "count below the theorem's bound for at least one instance\n";
    return ok ? kPass : kFail;
}

// --- figure -----------------------------------------------------------------

int cmd_figure(const std::string& name, const Common& o)
{
    const auto preset = parse_figure_preset(name);
    if (!preset)
        throw Error(ErrorKind::Usage, "unknown figure preset \"" + name + "\"");
    const std::string svg = render_scene(figure_preset(*preset));
    write_output(o.out.empty() ? name + ".svg" : o.out, svg);
    return kPass;
}

// --- report -----------------------------------------------------------------

int cmd_report(const Common& o)
{
    const PlaneCurve c = curve_from_json(require_spec(o));
    const Interval d = c.domain();
    Json j;
    j["schema"] = kReportSchema;
    j["curve"] = curve_to_json(c);
    j["arc_length"] = arc_length(c, d.lo, d.hi);
    std::vector<double> vts;
    for (const auto& v : find_vertices(c))
        vts.push_back(v.t);
    j["vertices"] = vts;
    const int grid = 512;
    double kmin = INFINITY, kmax = -INFINITY;
    for (int i = 0; i <= grid; ++i) {
        const double k = curvature(c, d.lo + d.length() * i / grid);
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    j["curvature_range"] = {kmin, kmax};
    if (c.closed()) {
        j["evolute_signed_length"] = evolute_signed_length(c);
        j["sextactic_points"] = sextactic_scan(c).roots;
    }
    write_output(o.out, dump(j));
    return kPass;
}

void add_common(CLI::App* app, Common& o)
{
    app->add_option("--curve", o.curve, "JSON curve or function spec");
    app->add_option("--samples", o.samples, "Number of sample parameters");
    app->add_option("--seed", o.seed, "Seed for batch generation");
    app->add_option("--out,-o", o.out, "Output path (stdout when omitted)");
    app->add_option("--tol", o.tol, "Tolerance override");
    app->add_option("--resolution", o.resolution, "Contour grid resolution")->check(CLI::Range(64, 8192));
    app->add_option("--degree", o.degree, "Taylor degree or derivative order")->check(CLI::Range(0, 9));
    app->add_option("--count", o.count, "Batch size for seeded scans");
    app->add_option("--bbox", o.bbox, "Oval box xmin,ymin,xmax,ymax")->delimiter(',');
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Osculating curves: verification sweeps, counting scans and figures"};
    app.require_subcommand(1);
    Common o;
    std::string theorem, kind, preset;

    auto* verify = app.add_subcommand("verify", "Check a nesting theorem on a curve or function");
    verify->add_option("theorem", theorem, "tait_kneser | taylor_even | taylor_odd | conics | moebius | cubic_ovals")
        ->required();
    add_common(verify, o);

    auto* scan = app.add_subcommand("scan", "Count vertices, sextactic points or zeros");
    scan->add_option("kind", kind, "vertices | sextactic | schwarzian_zeros | derivative_zeros")->required();
    add_common(scan, o);

    auto* figure = app.add_subcommand("figure", "Write a figure preset as SVG");
    figure->add_option("preset", preset, "Preset name")->required();
    add_common(figure, o);

    auto* report = app.add_subcommand("report", "Summarize a curve");
    add_common(report, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(theorem, o);
        if (*scan)
            return cmd_scan(kind, o);
        if (*figure)
            return cmd_figure(preset, o);
        return cmd_report(o);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::Usage:
        case ErrorKind::InvalidSpec:
        case ErrorKind::Domain:
        case ErrorKind::BboxTooSmall: return kUsage;
        default: return kFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
