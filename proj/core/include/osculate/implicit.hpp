#pragma once

// Bivariate polynomials F(x, y) of total degree <= 3, the implicit equations
// of conics and cubics.
//
// Coefficients are stored in graded order:
//   1 | x y | x^2 xy y^2 | x^3 x^2y xy^2 y^3

#include "osculate/geometry.hpp"
#include "osculate/jet.hpp"

#include <array>
#include <utility>
#include <vector>

namespace osc {

class ImplicitPoly {
public:
    ImplicitPoly() = default;
    ImplicitPoly(int degree, std::vector<double> coeffs);

    static constexpr int monomial_count(int degree) noexcept { return (degree + 1) * (degree + 2) / 2; }
    /// (x exponent, y exponent) of monomial k in graded order.
    static std::pair<int, int> exponents(int k) noexcept;

    int degree() const noexcept { return degree_; }
    const std::vector<double>& coeffs() const noexcept { return c_; }
    double coeff(int xe, int ye) const noexcept;

    double operator()(Point p) const noexcept;
    Vec2 gradient(Point p) const noexcept;

    /// Jet of t -> F(x(t), y(t)).
    Jet compose(const Jet& x, const Jet& y) const;

    /// G(p) = F(origin_frame(p)) where the local coordinates are
    /// u = dot(p - origin, e1) / scale, v = dot(p - origin, e2) / scale.
    ImplicitPoly pulled_back(Point origin, Vec2 e1, Vec2 e2, double scale) const;

    double norm2() const noexcept;
    ImplicitPoly scaled(double s) const;

private:
    int degree_ = 0;
    std::vector<double> c_{0.0};
};

/// Jets of every monomial of degree <= d evaluated along (x(t), y(t)).
std::vector<Jet> monomial_jets(int degree, const Jet& x, const Jet& y);

} // namespace osc
