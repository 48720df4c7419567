#pragma once

// Osculating conics, the sextactic function, and exact real intersection
// counting for pairs of conics.

#include "osculate/curve.hpp"
#include "osculate/implicit.hpp"
#include "osculate/report.hpp"

#include <array>
#include <optional>
#include <vector>

namespace osc {

enum class ConicType { Ellipse, Parabola, Hyperbola };

/// F(x, y) = a x^2 + b xy + c y^2 + d x + e y + f, scaled so the symmetric
/// matrix [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]] has Frobenius norm 1.
class Conic {
public:
    Conic() = default;
    /// Normalizes; the sign is kept as given.
    Conic(double a, double b, double c, double d, double e, double f);
    explicit Conic(const ImplicitPoly& p);

    /// (a, b, c, d, e, f).
    const std::array<double, 6>& coeffs() const noexcept { return k_; }
    std::array<std::array<double, 3>, 3> matrix() const noexcept;
    double det() const noexcept;
    /// |det| <= 1e-10: a line pair or worse.
    bool degenerate() const noexcept;
    /// By the sign of a c - b^2 / 4.
    ConicType type() const noexcept;
    /// Center of a central conic.
    std::optional<Point> center() const noexcept;

    double operator()(Point p) const noexcept;
    Vec2 gradient(Point p) const noexcept;
    ImplicitPoly implicit() const;
    /// Same conic with the opposite sign.
    Conic negated() const;

private:
    std::array<double, 6> k_{0, 0, 0, 0, 0, 1};
};

/// Null vector of the 5 x 6 jet-condition matrix, sign chosen so F < 0 on
/// the concave side of the curve. Throws DegenerateOsculation when the
/// null space is not one-dimensional.
Conic osculating_conic(const PlaneCurve& c, double t);

/// Coefficient 5 of F_t o gamma at t.
double sextactic_function(const PlaneCurve& c, double t);

struct SextacticScan {
    std::vector<double> ts;
    std::vector<double> s_values;
    std::vector<double> roots;

    int count() const noexcept { return static_cast<int>(roots.size()); }
};

/// Sign changes of the sextactic function over the domain (periodic for closed curves).
SextacticScan sextactic_scan(const PlaneCurve& c, int grid_n = 2048);

struct ConicIntersections {
    /// Distinct real affine points, resolved ones only.
    int affine = 0;
    /// Common real points on the line at infinity.
    int at_infinity = 0;
    /// Resolved affine points where the conics cross.
    int transverse = 0;
    /// Real roots of the resultant where the two conics agree to working
    /// precision in a neighbourhood, so no crossing can be resolved.
    int unresolved = 0;

    int points() const noexcept { return affine + at_infinity; }
};

/// Real intersections in the projective plane: resultant in one variable
/// after a generic rotation, Sturm root count, back substitution, plus
/// common directions of the quadratic parts.
ConicIntersections conic_intersections(const Conic& c1, const Conic& c2);

/// conic_intersections(c1, c2).points().
int conic_pair_intersections(const Conic& c1, const Conic& c2);

/// Intersecting when the conics meet; for disjoint ellipses nested or
/// external; DisjointUnclassified for other disjoint pairs.
PairRelation conic_pair_relation(const Conic& c1, const Conic& c2);

struct ConicOptions {
    /// |relative sextactic residual| at or below this counts as a sextactic point.
    double sextactic_zero = 1e-9;
};

/// Samples n_samples parameters, requires a constant-sign sextactic
/// function there, and checks that all osculating conics are pairwise disjoint.
NestingReport verify_conic_nesting(const PlaneCurve& c, int n_samples, const ConicOptions& opts = {});

} // namespace osc
