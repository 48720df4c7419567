#include "osculate/function.hpp"

#include "osculate/error.hpp"

#include <cmath>

namespace osc {

namespace {

struct JetOf {
    double x;
    int order;

    Jet operator()(const PolynomialFn& p) const { return polynomial_jet(p.coeffs, x, order); }
    Jet operator()(const GaussianFn&) const
    {
        const Jet v = Jet::variable(x, order);
        return exp(-(v * v));
    }
    Jet operator()(Elementary e) const
    {
        switch (e) {
        case Elementary::Sin: return sin_jet(x, order);
        case Elementary::Cos: return cos_jet(x, order);
        case Elementary::Exp: return exp_jet(x, order);
        case Elementary::Tan: return tan_jet(x, order);
        }
        throw Error(ErrorKind::Usage, "unknown elementary function");
    }
    Jet operator()(const FractionalLinearFn& f) const
    {
        const Jet g = f.inner ? f.inner->jet(x, order) : Jet::variable(x, order);
        const Jet den = f.m[2] * g + f.m[3];
        if (den.value() == 0.0)
            throw Error(ErrorKind::Singularity, "fractional-linear map evaluated at its pole");
        return (f.m[0] * g + f.m[1]) / den;
    }
};

} // namespace

SmoothFunction::SmoothFunction(Family f) : family_(std::move(f))
{
    if (const auto* p = std::get_if<PolynomialFn>(&family_); p && p->coeffs.empty())
        throw Error(ErrorKind::Usage, "polynomial needs at least one coefficient");
    if (const auto* m = std::get_if<FractionalLinearFn>(&family_)) {
        const double det = m->m[0] * m->m[3] - m->m[1] * m->m[2];
        if (det == 0.0)
            throw Error(ErrorKind::Usage, "fractional-linear map needs ad - bc != 0");
    }
}

SmoothFunction SmoothFunction::polynomial(std::vector<double> coeffs) { return SmoothFunction(PolynomialFn{std::move(coeffs)}); }

SmoothFunction SmoothFunction::monomial(int k)
{
    if (k < 0)
        throw Error(ErrorKind::Usage, "monomial degree must be non-negative");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = 1.0;
    return polynomial(std::move(c));
}

SmoothFunction SmoothFunction::gaussian() { return SmoothFunction(GaussianFn{}); }
SmoothFunction SmoothFunction::elementary(Elementary e) { return SmoothFunction(e); }

SmoothFunction SmoothFunction::fractional_linear(double a, double b, double c, double d)
{
    return SmoothFunction(FractionalLinearFn{{a, b, c, d}, nullptr});
}

SmoothFunction SmoothFunction::fractional_linear_of(double a, double b, double c, double d, SmoothFunction inner)
{
    return SmoothFunction(FractionalLinearFn{{a, b, c, d}, std::make_shared<const SmoothFunction>(std::move(inner))});
}

std::string SmoothFunction::name() const
{
    struct Namer {
        std::string operator()(const PolynomialFn&) const { return "polynomial"; }
        std::string operator()(const GaussianFn&) const { return "gaussian"; }
        std::string operator()(Elementary e) const
        {
            switch (e) {
            case Elementary::Sin: return "sin";
            case Elementary::Cos: return "cos";
            case Elementary::Exp: return "exp";
            case Elementary::Tan: return "tan";
            }
            return "elementary";
        }
        std::string operator()(const FractionalLinearFn&) const { return "moebius"; }
    };
    return std::visit(Namer{}, family_);
}

Jet SmoothFunction::jet(double x, int order) const
{
    if (order < 0 || order > kMaxJetOrder)
        throw Error(ErrorKind::Usage, "function jet order must be in [0, 10]");
    return std::visit(JetOf{x, order}, family_);
}

} // namespace osc
