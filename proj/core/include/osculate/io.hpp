#pragma once

// JSON and CSV in and out: curve and function specs, reports, exported
// conics, Moebius maps and ovals. Output is deterministic text.

#include "osculate/conic.hpp"
#include "osculate/cubic.hpp"
#include "osculate/curve.hpp"
#include "osculate/function.hpp"
#include "osculate/moebius.hpp"
#include "osculate/report.hpp"
#include "osculate/taylor.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace osc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Parses a file; Usage when it cannot be read, InvalidSpec when it is not JSON.
Json load_json_file(const std::filesystem::path& path);
/// Two-space indent and a trailing newline.
std::string dump(const Json& j);

/// {"family": ..., "params": {...}, "domain": [t0, t1], "closed": bool}.
/// Families: ellipse {a, b}, logspiral {growth}, polynomial_graph {coeffs},
/// fourier_oval {cos, sin}, cubic_oval_arc {coeffs[10], center[2]}, evolute {base}.
PlaneCurve curve_from_json(const Json& j);
Json curve_to_json(const PlaneCurve& c);

struct FunctionSpec {
    SmoothFunction f;
    /// The interval a sweep runs over, when the spec names one.
    std::optional<Interval> domain;
};

/// {"family": ..., "params": {...}, "domain": [lo, hi]} with families
/// polynomial {coeffs}, monomial {k}, gaussian, sin, cos, exp, tan,
/// moebius {a, b, c, d, inner?}; "domain" is optional.
FunctionSpec function_from_json(const Json& j);
Json function_to_json(const SmoothFunction& f, std::optional<Interval> domain = std::nullopt);

/// {"family": "circle_diffeo", "params": {"terms": [{"mode", "amplitude", "phase"}], "shift"}}.
CircleDiffeo circle_diffeo_from_json(const Json& j);
Json circle_diffeo_to_json(const CircleDiffeo& f);

/// schema, samples, verdicts, <hypothesis_name>, worst_margin (null when
/// undefined), passed. verdicts is an n x n matrix with null on the diagonal.
Json report_to_json(const NestingReport& r);
/// i,j,t_i,t_j,verdict for i < j.
std::string report_pairs_csv(const NestingReport& r);

Json report_to_json(const TaylorReport& r);
/// a,b,c0,...,cn: ascending coefficients of T_b - T_a for every reported pair.
std::string taylor_differences_csv(const TaylorReport& r, const SmoothFunction& f);

Json conic_to_json(const Conic& c);
/// t,a,b,c,d,e,f per conic.
std::string conics_csv(const std::vector<double>& ts, const std::vector<Conic>& conics);

/// [a, b, c, d], normalized.
Json moebius_to_json(const MoebiusMap& g);

/// oval,x,y rows; samples without an oval are skipped.
std::string ovals_csv(const std::vector<std::optional<Oval>>& ovals);

/// Shortest round-trip decimal form, as used in every CSV.
std::string csv_number(double v);

} // namespace osc
