#pragma once

// Truncated power series ("jets") of a scalar quantity at a base point.
//
// A jet of order K stores c[i] = f^(i)(base) / i! for i = 0..K. All
// arithmetic is exact up to truncation, so every derivative used by the
// library comes from series algebra rather than finite differencing.

#include <array>
#include <initializer_list>
#include <span>
#include <vector>

namespace osc {

inline constexpr int kMaxJetOrder = 10;

class Jet {
public:
    Jet() = default;
    Jet(double base, std::span<const double> coeffs);
    Jet(double base, std::initializer_list<double> coeffs);

    static Jet constant(double base, int order, double value);
    /// The jet of x -> x at `base`: [base, 1, 0, ...].
    static Jet variable(double base, int order);

    double base() const noexcept { return base_; }
    int order() const noexcept { return order_; }
    double operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    double value() const noexcept { return c_[0]; }
    std::span<const double> coeffs() const noexcept { return {c_.data(), static_cast<std::size_t>(order_ + 1)}; }

    /// f^(i)(base) = i! * c[i].
    double derivative(int i) const;

    Jet truncated(int order) const;
    Jet rebased(double base) const;

    /// Max abs coefficient; used for relative tolerances.
    double norm_inf() const noexcept;

    friend bool operator==(const Jet& a, const Jet& b) noexcept;

private:
    double base_ = 0.0;
    int order_ = 0;
    std::array<double, kMaxJetOrder + 1> c_{};

    friend Jet operator+(const Jet&, const Jet&);
    friend Jet operator-(const Jet&, const Jet&);
    friend Jet operator-(const Jet&);
    friend Jet operator*(double, const Jet&);
    friend Jet operator+(const Jet&, double);
    friend Jet jet_mul(const Jet&, const Jet&);
    friend Jet jet_div(const Jet&, const Jet&);
    friend Jet jet_compose(const Jet&, const Jet&);
    friend Jet jet_derivative(const Jet&);
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(double s, const Jet& a);
inline Jet operator*(const Jet& a, double s) { return s * a; }
Jet operator+(const Jet& a, double s);
inline Jet operator+(double s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, double s) { return a + (-s); }
inline Jet operator-(double s, const Jet& a) { return (-a) + s; }

/// Cauchy product truncated at the shared order.
Jet jet_mul(const Jet& a, const Jet& b);
inline Jet operator*(const Jet& a, const Jet& b) { return jet_mul(a, b); }

/// Series quotient; b.value() must be nonzero.
Jet jet_div(const Jet& a, const Jet& b);
inline Jet operator/(const Jet& a, const Jet& b) { return jet_div(a, b); }

/// Jet of outer(inner(x)) at inner.base(). Requires inner.value() == outer.base().
Jet jet_compose(const Jet& outer, const Jet& inner);

/// Jet of f' at the same base, one order lower.
Jet jet_derivative(const Jet& a);

Jet pow(const Jet& a, int n);

// Elementary generators: jets of the named function at `base`.
Jet sin_jet(double base, int order);
Jet cos_jet(double base, int order);
Jet exp_jet(double base, int order);
Jet tan_jet(double base, int order);
Jet sqrt_jet(double base, int order);
/// Jet of sum_i coeffs[i] x^i at `base`.
Jet polynomial_jet(std::span<const double> coeffs, double base, int order);

// Lifts of elementary functions to jet arguments (composition).
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet sqrt(const Jet& a);

} // namespace osc
