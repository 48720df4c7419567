#include "osculate/io.hpp"

#include "osculate/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace osc {

namespace {

[[noreturn]] void bad_spec(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad_spec(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

// Constructor argument errors inside a spec are spec errors.
template <class F>
auto as_spec(F&& make)
{
    try {
        return make();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Domain)
            bad_spec(e.what());
        throw;
    }
}

double number(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number())
        bad_spec(std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

std::vector<double> numbers(const Json& v, const char* what)
{
    if (!v.is_array())
        bad_spec(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number())
            bad_spec(std::string(what) + " must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

Interval interval(const Json& v)
{
    const auto d = numbers(v, "domain");
    if (d.size() != 2)
        bad_spec("domain must be [t0, t1]");
    return {d[0], d[1]};
}

Json params_of(const Json& j) { return j.contains("params") ? j.at("params") : Json::object(); }

} // namespace

Json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Usage, "cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad_spec(path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- curves -----------------------------------------------------------------

PlaneCurve curve_from_json(const Json& j)
{
    const Json& fam = field(j, "family");
    if (!fam.is_string())
        bad_spec("family must be a string");
    const std::string name = fam.get<std::string>();
    const Json p = params_of(j);
    const Interval dom = interval(field(j, "domain"));
    const bool closed = j.value("closed", false);

    CurveFamily family;
    if (name == "ellipse") {
        family = Ellipse{number(p, "a"), number(p, "b")};
    } else if (name == "logspiral") {
        family = LogSpiral{number(p, "growth")};
    } else if (name == "polynomial_graph") {
        family = PolynomialGraph{numbers(field(p, "coeffs"), "coeffs")};
    } else if (name == "fourier_oval") {
        family = FourierOval{numbers(field(p, "cos"), "cos"), numbers(field(p, "sin"), "sin")};
    } else if (name == "cubic_oval_arc") {
        const auto k = numbers(field(p, "coeffs"), "coeffs");
        const auto c = numbers(field(p, "center"), "center");
        if (k.size() != 10 || c.size() != 2)
            bad_spec("cubic_oval_arc needs 10 coeffs and a 2-point center");
        CubicOvalArc arc;
        std::copy(k.begin(), k.end(), arc.coeffs.begin());
        arc.center = {c[0], c[1]};
        family = arc;
    } else if (name == "evolute") {
        family = EvoluteOf{std::make_shared<const PlaneCurve>(curve_from_json(field(p, "base")))};
    } else {
        bad_spec("unknown curve family \"" + name + "\"");
    }
    return as_spec([&] { return PlaneCurve(std::move(family), dom, closed); });
}

Json curve_to_json(const PlaneCurve& c)
{
    Json p = std::visit(
        [](const auto& f) -> Json {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Ellipse>)
                return {{"a", f.a}, {"b", f.b}};
            else if constexpr (std::is_same_v<T, LogSpiral>)
                return {{"growth", f.growth}};
            else if constexpr (std::is_same_v<T, PolynomialGraph>)
                return {{"coeffs", f.coeffs}};
            else if constexpr (std::is_same_v<T, FourierOval>)
                return {{"cos", f.cos_coeffs}, {"sin", f.sin_coeffs}};
            else if constexpr (std::is_same_v<T, CubicOvalArc>)
                return {{"coeffs", f.coeffs}, {"center", {f.center.x, f.center.y}}};
            else
                return {{"base", curve_to_json(*f.base)}};
        },
        c.family());
    return {{"family", c.family_name()},
            {"params", p},
            {"domain", {c.domain().lo, c.domain().hi}},
            {"closed", c.closed()}};
}

// --- functions --------------------------------------------------------------

FunctionSpec function_from_json(const Json& j)
{
    const Json& fam = field(j, "family");
    if (!fam.is_string())
        bad_spec("family must be a string");
    const std::string name = fam.get<std::string>();
    const Json p = params_of(j);
    std::optional<Interval> dom;
    if (j.contains("domain"))
        dom = interval(j.at("domain"));

    const auto make = [&]() -> SmoothFunction {
        if (name == "polynomial")
            return SmoothFunction::polynomial(numbers(field(p, "coeffs"), "coeffs"));
        if (name == "monomial") {
            const Json& k = field(p, "k");
            if (!k.is_number_integer())
                bad_spec("monomial k must be an integer");
            return SmoothFunction::monomial(k.get<int>());
        }
        if (name == "gaussian")
            return SmoothFunction::gaussian();
        if (name == "sin")
            return SmoothFunction::elementary(Elementary::Sin);
        if (name == "cos")
            return SmoothFunction::elementary(Elementary::Cos);
        if (name == "exp")
            return SmoothFunction::elementary(Elementary::Exp);
        if (name == "tan")
            return SmoothFunction::elementary(Elementary::Tan);
        if (name == "moebius") {
            const double a = number(p, "a"), b = number(p, "b"), c = number(p, "c"), d = number(p, "d");
            if (p.contains("inner"))
                return SmoothFunction::fractional_linear_of(a, b, c, d, function_from_json(p.at("inner")).f);
            return SmoothFunction::fractional_linear(a, b, c, d);
        }
        bad_spec("unknown function family \"" + name + "\"");
    };
    return {as_spec(make), dom};
}

Json function_to_json(const SmoothFunction& f, std::optional<Interval> domain)
{
    Json j = std::visit(
        [](const auto& fam) -> Json {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialFn>) {
                return {{"family", "polynomial"}, {"params", {{"coeffs", fam.coeffs}}}};
            } else if constexpr (std::is_same_v<T, GaussianFn>) {
                return {{"family", "gaussian"}, {"params", Json::object()}};
            } else if constexpr (std::is_same_v<T, Elementary>) {
                static constexpr const char* names[] = {"sin", "cos", "exp", "tan"};
                return {{"family", names[static_cast<int>(fam)]}, {"params", Json::object()}};
            } else {
                Json p = {{"a", fam.m[0]}, {"b", fam.m[1]}, {"c", fam.m[2]}, {"d", fam.m[3]}};
                if (fam.inner)
                    p["inner"] = function_to_json(*fam.inner);
                return {{"family", "moebius"}, {"params", p}};
            }
        },
        f.family());
    if (domain)
        j["domain"] = {domain->lo, domain->hi};
    return j;
}

CircleDiffeo circle_diffeo_from_json(const Json& j)
{
    const Json& fam = field(j, "family");
    if (!fam.is_string() || fam.get<std::string>() != "circle_diffeo")
        bad_spec("expected family \"circle_diffeo\"");
    const Json p = params_of(j);
    std::vector<CircleDiffeo::Term> terms;
    if (p.contains("terms")) {
        if (!p.at("terms").is_array())
            bad_spec("terms must be an array");
        for (const auto& t : p.at("terms")) {
            const Json& mode = field(t, "mode");
            if (!mode.is_number_integer())
                bad_spec("term mode must be an integer");
            terms.push_back({mode.get<int>(), number(t, "amplitude"), t.contains("phase") ? number(t, "phase") : 0.0});
        }
    }
    return CircleDiffeo(std::move(terms), p.contains("shift") ? number(p, "shift") : 0.0);
}

Json circle_diffeo_to_json(const CircleDiffeo& f)
{
    Json terms = Json::array();
    for (const auto& t : f.terms())
        terms.push_back({{"mode", t.mode}, {"amplitude", t.amplitude}, {"phase", t.phase}});
    return {{"family", "circle_diffeo"}, {"params", {{"terms", terms}, {"shift", f.shift()}}}};
}

// --- reports ----------------------------------------------------------------

namespace {

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

} // namespace

Json report_to_json(const NestingReport& r)
{
    Json verdicts = Json::array();
    for (const auto& row : r.verdicts) {
        Json jr = Json::array();
        for (const auto& v : row)
            jr.push_back(v ? Json(std::string(to_string(*v))) : Json(nullptr));
        verdicts.push_back(std::move(jr));
    }
    Json j;
    j["schema"] = kReportSchema;
    j["samples"] = r.samples;
    j["verdicts"] = std::move(verdicts);
    j[r.hypothesis_name] = r.hypothesis_holds;
    j["worst_margin"] = finite_or_null(r.worst_margin);
    j["passed"] = r.passed;
    return j;
}

std::string csv_number(double v)
{
    if (std::isnan(v))
        return "nan";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string report_pairs_csv(const NestingReport& r)
{
    std::string out = "i,j,t_i,t_j,verdict\n";
    for (std::size_t i = 0; i < r.verdicts.size(); ++i)
        for (std::size_t j = i + 1; j < r.verdicts[i].size(); ++j) {
            if (!r.verdicts[i][j])
                continue;
            out += std::to_string(i) + "," + std::to_string(j) + "," + csv_number(r.samples[i]) + "," +
                   csv_number(r.samples[j]) + "," + std::string(to_string(*r.verdicts[i][j])) + "\n";
        }
    return out;
}

Json report_to_json(const TaylorReport& r)
{
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"a", p.a},
                         {"b", p.b},
                         {"roots_in_claim", p.roots_in_claim},
                         {"roots_outside", p.roots_outside},
                         {"min_gap", finite_or_null(p.min_gap)},
                         {"sign_ok", p.sign_ok}});
    Json j;
    j["schema"] = kReportSchema;
    j["theorem"] = r.theorem;
    j["degree"] = r.degree;
    j["samples"] = r.samples;
    j["pairs"] = std::move(pairs);
    j[r.hypothesis_name] = r.hypothesis_holds;
    j["derivative_sign"] = r.derivative_sign;
    j["min_gap"] = finite_or_null(r.min_gap);
    j["degenerate"] = r.degenerate;
    j["passed"] = r.passed;
    return j;
}

std::string taylor_differences_csv(const TaylorReport& r, const SmoothFunction& f)
{
    std::string out = "a,b";
    for (int i = 0; i <= r.degree; ++i)
        out += ",c" + std::to_string(i);
    out += "\n";
    for (const auto& p : r.pairs) {
        const Polynomial d = taylor_difference(f, p.a, p.b, r.degree);
        out += csv_number(p.a) + "," + csv_number(p.b);
        for (int i = 0; i <= r.degree; ++i)
            out += "," + csv_number(i < static_cast<int>(d.coeffs().size()) ? d.coeffs()[static_cast<std::size_t>(i)] : 0.0);
        out += "\n";
    }
    return out;
}

Json conic_to_json(const Conic& c)
{
    const auto& k = c.coeffs();
    return {{"a", k[0]}, {"b", k[1]}, {"c", k[2]}, {"d", k[3]}, {"e", k[4]}, {"f", k[5]}};
}

std::string conics_csv(const std::vector<double>& ts, const std::vector<Conic>& conics)
{
    if (ts.size() != conics.size())
        throw Error(ErrorKind::Usage, "one parameter per conic");
    std::string out = "t,a,b,c,d,e,f\n";
    for (std::size_t i = 0; i < conics.size(); ++i) {
        out += csv_number(ts[i]);
        for (double v : conics[i].coeffs())
            out += "," + csv_number(v);
        out += "\n";
    }
    return out;
}

Json moebius_to_json(const MoebiusMap& g)
{
    const auto& m = g.coeffs();
    return Json::array({m[0], m[1], m[2], m[3]});
}

std::string ovals_csv(const std::vector<std::optional<Oval>>& ovals)
{
    std::string out = "oval,x,y\n";
    for (std::size_t i = 0; i < ovals.size(); ++i) {
        if (!ovals[i])
            continue;
        for (const Point& p : ovals[i]->polyline())
            out += std::to_string(i) + "," + csv_number(p.x) + "," + csv_number(p.y) + "\n";
    }
    return out;
}

} // namespace osc
