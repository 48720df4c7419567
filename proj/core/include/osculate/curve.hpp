#pragma once

// Closed-form plane curve families with exact coordinate jets, plus the
// curvature, vertex and arc-length operations built on them.

#include "osculate/geometry.hpp"
#include "osculate/jet.hpp"

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace osc {

/// (a cos t, b sin t).
struct Ellipse {
    double a = 1.0;
    double b = 1.0;
};

/// e^{growth t} (cos t, sin t).
struct LogSpiral {
    double growth = 0.2;
};

/// The graph (t, p(t)) with p given by ascending coefficients.
struct PolynomialGraph {
    std::vector<double> coeffs;
};

/// Radial perturbation r(t) = 1 + sum_k (cos_coeffs[k-1] cos kt + sin_coeffs[k-1] sin kt).
struct FourierOval {
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
};

/// Arc of the zero set of a cubic in the polar chart around `center`:
/// t -> center + r(t) (cos t, sin t) with F(center + r(t)(cos t, sin t)) = 0.
struct CubicOvalArc {
    std::array<double, 10> coeffs{};
    Point center;
};

class PlaneCurve;

/// Locus of centers of curvature of another curve, same parameter.
struct EvoluteOf {
    std::shared_ptr<const PlaneCurve> base;
};

using CurveFamily = std::variant<Ellipse, LogSpiral, PolynomialGraph, FourierOval, CubicOvalArc, EvoluteOf>;

struct CurveJet2 {
    Jet x;
    Jet y;

    Point position() const noexcept { return {x.value(), y.value()}; }
    /// i-th derivative vector.
    Vec2 derivative(int i) const { return {x.derivative(i), y.derivative(i)}; }
};

class PlaneCurve {
public:
    /// Validates regularity on a grid and, for closed curves, periodicity of the jets.
    PlaneCurve(CurveFamily family, Interval domain, bool closed);

    static PlaneCurve ellipse(double a, double b);
    static PlaneCurve ellipse_arc(double a, double b, Interval domain);
    static PlaneCurve log_spiral(double growth, Interval domain);
    static PlaneCurve polynomial_graph(std::vector<double> coeffs, Interval domain);
    static PlaneCurve fourier_oval(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);
    static PlaneCurve cubic_oval_arc(const std::array<double, 10>& coeffs, Point center, Interval domain);
    /// The evolute of `base` restricted to `domain` (cusps at vertices are allowed).
    static PlaneCurve evolute_of(const PlaneCurve& base, Interval domain);

    const CurveFamily& family() const noexcept { return family_; }
    std::string family_name() const;
    Interval domain() const noexcept { return domain_; }
    bool closed() const noexcept { return closed_; }

    CurveJet2 jet(double t, int order) const;
    Point point(double t) const;

private:
    CurveJet2 jet_unchecked(double t, int order) const;

    CurveFamily family_;
    Interval domain_;
    bool closed_ = false;
};

CurveJet2 evaluate_jet(const PlaneCurve& c, double t, int order);

/// Signed curvature (x'y'' - y'x'') / |gamma'|^3.
double curvature(const PlaneCurve& c, double t);

/// Jet of the signed curvature as a function of the parameter; needs position jets of order + 2.
Jet curvature_jet(const PlaneCurve& c, double t, int order);

struct Vertex {
    double t = 0.0;
    /// |kappa''| < 1e-8 at the root (curvature inflection rather than an extremum).
    bool degenerate = false;
};

/// Zeros of kappa' located by a sign-change scan over grid_n cells and bisection.
std::vector<Vertex> find_vertices(const PlaneCurve& c, int grid_n = 2048);

/// Integral of |gamma'| over [a, b] by adaptive Gauss-Kronrod quadrature.
double arc_length(const PlaneCurve& c, double a, double b);

/// Unit tangent and the counter-clockwise unit normal.
Vec2 unit_tangent(const PlaneCurve& c, double t);
Vec2 unit_normal(const PlaneCurve& c, double t);

} // namespace osc
