#pragma once

// Osculating algebraic curves of degree 2 and 3 by jet conditions.
//
// The fit happens in a local frame at gamma(t): origin gamma(t), axes the
// unit tangent and normal, unit length the radius of curvature, and the
// parameter rescaled to unit speed. The null vector of the row-normalized
// jet-condition matrix is then pulled back to global coordinates.

#include "osculate/curve.hpp"
#include "osculate/implicit.hpp"

#include <vector>

namespace osc {

struct OsculatingFit {
    /// Global implicit equation; unit norm (Frobenius of the symmetric
    /// matrix for conics, Euclidean for cubics), negative at `probe`.
    ImplicitPoly poly;
    /// Singular values of the jet-condition matrix, descending.
    std::vector<double> singular_values;
    /// sigma_min / sigma_max.
    double conditioning = 0.0;
    bool degenerate = false;
    /// Jet coefficient just past the fitted ones of poly o gamma, in the curve's parameter.
    double residual = 0.0;
    /// The same coefficient in the local frame divided by the norm of its
    /// row: a scale-free contact defect in [0, 1].
    double relative_residual = 0.0;
    Point base_point;
    /// gamma(t) + 1e-3 rho N_in, a point on the concave side.
    Point probe;
};

/// Osculating curve of degree 2 or 3. Throws FlatPoint where the curvature vanishes.
OsculatingFit osculating_fit(const PlaneCurve& c, double t, int degree, double degenerate_ratio = 1e-8);

} // namespace osc
