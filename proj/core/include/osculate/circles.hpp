#pragma once

// Osculating circles, the evolute/involute pair, and the pairwise nesting
// check for arcs of monotone curvature.

#include "osculate/curve.hpp"
#include "osculate/report.hpp"

namespace osc {

struct Circle {
    Point center;
    double radius = 1.0;
};

/// Radius 1/|kappa|, center gamma(t) + (1/kappa) N with N the counter-clockwise normal.
Circle osculating_circle(const PlaneCurve& c, double t);

Point evolute_point(const PlaneCurve& c, double t);

/// Free end of a taut string of total length `string_length` laid along the
/// curve from its domain start: gamma(t) + T(t) (string_length - s(t)), with
/// s(t) the arc length already wound onto the curve.
Point involute_point(const PlaneCurve& c, double t, double string_length);

/// Default tangency band 1e-9 (r1 + r2).
double default_pair_tolerance(const Circle& a, const Circle& b) noexcept;

PairRelation classify_pair(const Circle& a, const Circle& b, double tol);

struct TaitKneserOptions {
    /// Bound on |evolute arc - |r1 - r2|| for adjacent samples.
    double string_tol = 1e-7;
    /// Relative tangency band; the absolute band is rel_tol * (r1 + r2).
    double rel_tol = 1e-9;
};

/// Samples n_samples uniform parameters, checks strict monotonicity of the
/// curvature, classifies every pair of osculating circles and cross-checks
/// the string identity on adjacent samples.
NestingReport verify_tait_kneser(const PlaneCurve& c, int n_samples, const TaitKneserOptions& opts = {});

struct EvoluteLength {
    /// Sum over vertex-to-vertex arcs of sign(rho') * arc length.
    double signed_total = 0.0;
    double unsigned_total = 0.0;
    std::vector<double> cusps;
};

EvoluteLength evolute_length(const PlaneCurve& c, int grid_n = 2048);
double evolute_signed_length(const PlaneCurve& c);

} // namespace osc
