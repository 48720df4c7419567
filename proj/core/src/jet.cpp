#include "osculate/jet.hpp"

#include "osculate/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace osc {

namespace {

void check_order(int order)
{
    if (order < 0 || order > kMaxJetOrder)
        throw Error(ErrorKind::Usage, "jet order " + std::to_string(order) + " outside [0, 10]");
}

void check_compatible(const Jet& a, const Jet& b)
{
    if (a.order() != b.order())
        throw Error(ErrorKind::Usage, "jet order mismatch");
    if (a.base() != b.base())
        throw Error(ErrorKind::Usage, "jet base mismatch");
}

constexpr double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

Jet::Jet(double base, std::span<const double> coeffs) : base_(base)
{
    if (coeffs.empty())
        throw Error(ErrorKind::Usage, "jet needs at least one coefficient");
    order_ = static_cast<int>(coeffs.size()) - 1;
    check_order(order_);
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Jet::Jet(double base, std::initializer_list<double> coeffs)
    : Jet(base, std::span<const double>(coeffs.begin(), coeffs.size()))
{}

Jet Jet::constant(double base, int order, double value)
{
    check_order(order);
    Jet j;
    j.base_ = base;
    j.order_ = order;
    j.c_[0] = value;
    return j;
}

Jet Jet::variable(double base, int order)
{
    Jet j = constant(base, order, base);
    if (order >= 1)
        j.c_[1] = 1.0;
    return j;
}

double Jet::derivative(int i) const
{
    if (i < 0 || i > order_)
        throw Error(ErrorKind::Usage, "derivative index outside jet order");
    return factorial(i) * c_[static_cast<std::size_t>(i)];
}

Jet Jet::truncated(int order) const
{
    if (order < 0 || order > order_)
        throw Error(ErrorKind::Usage, "cannot truncate jet to a higher order");
    Jet j = *this;
    j.order_ = order;
    std::fill(j.c_.begin() + order + 1, j.c_.end(), 0.0);
    return j;
}

Jet Jet::rebased(double base) const
{
    Jet j = *this;
    j.base_ = base;
    return j;
}

double Jet::norm_inf() const noexcept
{
    double m = 0.0;
    for (int i = 0; i <= order_; ++i)
        m = std::max(m, std::abs(c_[static_cast<std::size_t>(i)]));
    return m;
}

bool operator==(const Jet& a, const Jet& b) noexcept
{
    if (a.base_ != b.base_ || a.order_ != b.order_)
        return false;
    return std::equal(a.c_.begin(), a.c_.begin() + a.order_ + 1, b.c_.begin());
}

Jet operator+(const Jet& a, const Jet& b)
{
    check_compatible(a, b);
    Jet r = a;
    for (int i = 0; i <= a.order_; ++i)
        r.c_[i] += b.c_[i];
    return r;
}

Jet operator-(const Jet& a, const Jet& b)
{
    check_compatible(a, b);
    Jet r = a;
    for (int i = 0; i <= a.order_; ++i)
        r.c_[i] -= b.c_[i];
    return r;
}

Jet operator-(const Jet& a)
{
    Jet r = a;
    for (int i = 0; i <= a.order_; ++i)
        r.c_[i] = -r.c_[i];
    return r;
}

Jet operator*(double s, const Jet& a)
{
    Jet r = a;
    for (int i = 0; i <= a.order_; ++i)
        r.c_[i] *= s;
    return r;
}

Jet operator+(const Jet& a, double s)
{
    Jet r = a;
    r.c_[0] += s;
    return r;
}

Jet jet_mul(const Jet& a, const Jet& b)
{
    check_compatible(a, b);
    Jet r = Jet::constant(a.base_, a.order_, 0.0);
    for (int k = 0; k <= a.order_; ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i)
            s += a.c_[i] * b.c_[k - i];
        r.c_[k] = s;
    }
    return r;
}

Jet jet_div(const Jet& a, const Jet& b)
{
    check_compatible(a, b);
    if (b.c_[0] == 0.0)
        throw Error(ErrorKind::Singularity, "jet division by a series with zero constant term");
    Jet q = Jet::constant(a.base_, a.order_, 0.0);
    for (int k = 0; k <= a.order_; ++k) {
        double s = a.c_[k];
        for (int j = 1; j <= k; ++j)
            s -= b.c_[j] * q.c_[k - j];
        q.c_[k] = s / b.c_[0];
    }
    return q;
}

Jet jet_compose(const Jet& outer, const Jet& inner)
{
    if (outer.order_ != inner.order_)
        throw Error(ErrorKind::Usage, "jet order mismatch in composition");
    const double u0 = inner.c_[0];
    const double tol = 1e-12 * std::max(1.0, std::abs(u0));
    if (std::abs(u0 - outer.base_) > tol)
        throw Error(ErrorKind::Usage, "composition needs inner value equal to outer base");

    // Horner in the nilpotent increment delta = inner - u0.
    Jet delta = inner;
    delta.c_[0] = 0.0;
    Jet r = Jet::constant(inner.base_, inner.order_, outer.c_[outer.order_]);
    for (int i = outer.order_ - 1; i >= 0; --i)
        r = jet_mul(r, delta) + outer.c_[i];
    return r;
}

Jet jet_derivative(const Jet& a)
{
    if (a.order_ < 1)
        throw Error(ErrorKind::Usage, "cannot differentiate an order-0 jet");
    Jet r = Jet::constant(a.base_, a.order_ - 1, 0.0);
    for (int i = 0; i < a.order_; ++i)
        r.c_[i] = (i + 1) * a.c_[i + 1];
    return r;
}

Jet pow(const Jet& a, int n)
{
    if (n < 0)
        throw Error(ErrorKind::Usage, "negative jet power");
    Jet r = Jet::constant(a.base(), a.order(), 1.0);
    for (int i = 0; i < n; ++i)
        r = jet_mul(r, a);
    return r;
}

Jet sin_jet(double base, int order)
{
    check_order(order);
    std::array<double, kMaxJetOrder + 1> c{};
    const double s = std::sin(base), co = std::cos(base);
    const double cycle[4] = {s, co, -s, -co};
    for (int i = 0; i <= order; ++i)
        c[i] = cycle[i % 4] / factorial(i);
    return Jet(base, std::span<const double>(c.data(), order + 1));
}

Jet cos_jet(double base, int order)
{
    check_order(order);
    std::array<double, kMaxJetOrder + 1> c{};
    const double s = std::sin(base), co = std::cos(base);
    const double cycle[4] = {co, -s, -co, s};
    for (int i = 0; i <= order; ++i)
        c[i] = cycle[i % 4] / factorial(i);
    return Jet(base, std::span<const double>(c.data(), order + 1));
}

Jet exp_jet(double base, int order)
{
    check_order(order);
    std::array<double, kMaxJetOrder + 1> c{};
    const double e = std::exp(base);
    for (int i = 0; i <= order; ++i)
        c[i] = e / factorial(i);
    return Jet(base, std::span<const double>(c.data(), order + 1));
}

Jet tan_jet(double base, int order)
{
    return jet_div(sin_jet(base, order), cos_jet(base, order));
}

Jet sqrt_jet(double base, int order)
{
    check_order(order);
    if (!(base > 0.0))
        throw Error(ErrorKind::Domain, "sqrt jet needs a positive base");
    // c[i] = binom(1/2, i) * base^(1/2 - i)
    std::array<double, kMaxJetOrder + 1> c{};
    double binom = 1.0;
    double p = std::sqrt(base);
    for (int i = 0; i <= order; ++i) {
        c[i] = binom * p;
        binom *= (0.5 - i) / (i + 1);
        p /= base;
    }
    return Jet(base, std::span<const double>(c.data(), order + 1));
}

Jet polynomial_jet(std::span<const double> coeffs, double base, int order)
{
    const Jet x = Jet::variable(base, order);
    Jet r = Jet::constant(base, order, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = jet_mul(r, x) + *it;
    return r;
}

Jet sin(const Jet& a) { return jet_compose(sin_jet(a.value(), a.order()), a); }
Jet cos(const Jet& a) { return jet_compose(cos_jet(a.value(), a.order()), a); }
Jet exp(const Jet& a) { return jet_compose(exp_jet(a.value(), a.order()), a); }
Jet sqrt(const Jet& a) { return jet_compose(sqrt_jet(a.value(), a.order()), a); }

} // namespace osc
