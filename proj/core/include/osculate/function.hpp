#pragma once

// Closed-form scalar functions of one variable that hand out exact jets.

#include "osculate/jet.hpp"

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace osc {

class SmoothFunction;

struct PolynomialFn {
    /// Ascending powers of x.
    std::vector<double> coeffs;
};

/// exp(-x^2).
struct GaussianFn {};

enum class Elementary { Sin, Cos, Exp, Tan };

/// (a g(x) + b) / (c g(x) + d); g is the identity when `inner` is null.
struct FractionalLinearFn {
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};
    std::shared_ptr<const SmoothFunction> inner;
};

class SmoothFunction {
public:
    using Family = std::variant<PolynomialFn, GaussianFn, Elementary, FractionalLinearFn>;

    explicit SmoothFunction(Family f);

    static SmoothFunction polynomial(std::vector<double> coeffs);
    /// x^k.
    static SmoothFunction monomial(int k);
    static SmoothFunction gaussian();
    static SmoothFunction elementary(Elementary e);
    static SmoothFunction fractional_linear(double a, double b, double c, double d);
    /// The fractional-linear map (a, b; c, d) applied after `inner`.
    static SmoothFunction fractional_linear_of(double a, double b, double c, double d, SmoothFunction inner);

    const Family& family() const noexcept { return family_; }
    std::string name() const;

    /// Jet of f at x; order <= 10.
    Jet jet(double x, int order) const;
    double operator()(double x) const { return jet(x, 0).value(); }
    /// f^(k)(x).
    double derivative(double x, int k) const { return jet(x, k).derivative(k); }

private:
    Family family_;
};

} // namespace osc
