#pragma once

// Taylor polynomials as a one-parameter family and the disjointness checks
// for their graphs, plus the Rolle-type zero count for flat functions.

#include "osculate/function.hpp"
#include "osculate/geometry.hpp"
#include "osculate/polynomial.hpp"
#include "osculate/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace osc {

struct TaylorPoly {
    double base = 0.0;
    int degree = 0;
    /// coeffs[i] = f^(i)(base) / i!, in powers of (x - base).
    std::vector<double> coeffs;

    double operator()(double x) const noexcept;
    /// The same polynomial in powers of x.
    Polynomial monomial() const;
};

TaylorPoly taylor_poly(const SmoothFunction& f, double t, int n);

/// d/dt T_t(x) = f^(n+1)(t) / n! (x - t)^n.
double taylor_velocity(const SmoothFunction& f, double t, int n, double x);

/// T_b - T_a in powers of x.
Polynomial taylor_difference(const SmoothFunction& f, double a, double b, int n);

struct TaylorPair {
    double a = 0.0;
    double b = 0.0;
    /// Real roots of T_b - T_a where the theorem forbids them.
    int roots_in_claim = 0;
    /// Real roots elsewhere on the line; nothing is claimed for x < b.
    int roots_outside = 0;
    /// min |T_b - T_a| over the x grid.
    double min_gap = 0.0;
    /// sign(T_b - T_a) matched sign(f^(n+1)) on the whole x grid.
    bool sign_ok = true;
};

struct TaylorReport {
    /// "taylor_even" or "taylor_odd".
    std::string theorem;
    int degree = 0;
    /// JSON key of `hypothesis_holds`.
    std::string hypothesis_name = "constant_sign_derivative";
    bool hypothesis_holds = false;
    bool passed = false;
    bool degenerate = false;
    std::optional<HypothesisFailure> failure;
    /// Sign of f^(n+1) on the interval when the hypothesis holds.
    int derivative_sign = 0;
    std::vector<double> samples;
    std::vector<TaylorPair> pairs;
    double min_gap = 0.0;
    std::vector<std::string> notes;
};

struct TaylorOptions {
    /// Sample points in I; all pairs a < b are checked.
    int n_samples = 20;
    /// Validation grid for the sign of f^(n+1).
    int hypothesis_grid = 256;
    /// x grid for the sign scan. Even degree: I widened by its length on both
    /// sides. Odd degree: [b, b + x_span].
    int x_grid = 401;
    double x_span = 100.0;
};

/// Graphs of T_a and T_b are disjoint on the whole line for even n when
/// f^(n+1) keeps its sign; decided by a Sturm count of T_b - T_a.
TaylorReport verify_disjoint_even(const SmoothFunction& f, Interval I, int n, const TaylorOptions& opts = {});

/// Odd n: T_b - T_a has no root on [b, b + x_span].
TaylorReport verify_disjoint_odd(const SmoothFunction& f, Interval I, int n, const TaylorOptions& opts = {});

struct ConvexityOrder {
    int k = 0;
    /// Distinct real roots of D^(k) (Sturm).
    int real_roots = 0;
    bool positive_on_grid = false;
};

struct ConvexityReport {
    double a = 0.0;
    double b = 0.0;
    int degree = 0;
    Polynomial difference;
    std::vector<ConvexityOrder> orders;
    bool passed = false;
    bool degenerate = false;
};

/// Even-order derivatives of D = T_b - T_a, oriented by sign(f^(n+1)), are
/// root-free and positive on a grid around [a, b].
ConvexityReport difference_higher_convexity(const SmoothFunction& f, double a, double b, int n);

struct DerivativeZeros {
    std::vector<double> zeros;
    /// The signs of f^(n) at the window ends disagree with the Gaussian's
    /// asymptotics, so zeros may lie outside the window.
    bool window_warning = false;

    int count() const noexcept { return static_cast<int>(zeros.size()); }
};

/// Sign changes of f^(n) over `window`. f must be the Gaussian.
DerivativeZeros count_derivative_zeros(const SmoothFunction& f, int n, Interval window, int grid_n = 4096);

} // namespace osc
