#include "osculate/taylor.hpp"

#include "osculate/error.hpp"
#include "osculate/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace osc {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

void check_degree(int n, int max_n)
{
    if (n < 0 || n > max_n)
        throw Error(ErrorKind::Usage, "Taylor degree must be in [0, " + std::to_string(max_n) + "]");
}

std::vector<double> uniform_samples(Interval I, int n)
{
    std::vector<double> s(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i)
        s[i] = (n == 1) ? I.lo : (i == n - 1 ? I.hi : I.lo + I.length() * i / (n - 1));
    return s;
}

// Fills hypothesis fields; returns false when f^(n+1) vanishes or changes sign on the grid.
bool check_hypothesis(const SmoothFunction& f, Interval I, int n, int grid, TaylorReport& rep)
{
    int s0 = 0;
    for (int i = 0; i <= grid; ++i) {
        const double t = (i == grid) ? I.hi : I.lo + I.length() * i / grid;
        const int s = sgn(f.derivative(t, n + 1));
        if (s == 0 || (s0 != 0 && s != s0)) {
            rep.hypothesis_holds = false;
            rep.failure = HypothesisFailure{t, s == 0 ? "derivative of order n+1 vanishes"
                                                      : "derivative of order n+1 changes sign"};
            return false;
        }
        s0 = s;
    }
    rep.hypothesis_holds = true;
    rep.derivative_sign = s0;
    return true;
}

TaylorReport run_pairs(const SmoothFunction& f, Interval I, int n, const TaylorOptions& opts, bool even)
{
    if (!(I.hi > I.lo))
        throw Error(ErrorKind::Usage, "interval needs lo < hi");
    if (opts.x_grid < 2 || opts.hypothesis_grid < 1 || !(opts.x_span > 0.0))
        throw Error(ErrorKind::Usage, "grid sizes must be positive");
    TaylorReport rep;
    rep.theorem = even ? "taylor_even" : "taylor_odd";
    rep.degree = n;
    rep.samples = uniform_samples(I, opts.n_samples);
    if (!check_hypothesis(f, I, n, opts.hypothesis_grid, rep))
        return rep;
    if (rep.samples.size() < 2) {
        rep.degenerate = true;
        rep.passed = true;
        rep.notes.push_back("fewer than two samples; the pairwise claim is vacuous");
        return rep;
    }

    const int s = rep.derivative_sign;
    double worst = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t i = 0; i < rep.samples.size(); ++i)
        for (std::size_t j = i + 1; j < rep.samples.size(); ++j) {
            TaylorPair p;
            p.a = rep.samples[i];
            p.b = rep.samples[j];
            const Polynomial D = taylor_difference(f, p.a, p.b, n);
            const SturmSequence sturm(D);
            const int total = sturm.count_real_roots();

            double xlo, xhi;
            if (even) {
                p.roots_in_claim = total;
                xlo = I.lo - I.length();
                xhi = I.hi + I.length();
                // Leading coefficient (f^(n)(b) - f^(n)(a)) / n! carries the sign at both infinities.
                p.sign_ok = sgn(D.leading()) == s;
            } else {
                xlo = p.b;
                xhi = p.b + opts.x_span;
                p.roots_in_claim = sturm.count_roots(xlo, xhi) + (D(xlo) == 0.0 ? 1 : 0);
            }
            p.roots_outside = total - p.roots_in_claim;

            p.min_gap = std::numeric_limits<double>::infinity();
            for (int k = 0; k < opts.x_grid; ++k) {
                const double x = (k == opts.x_grid - 1) ? xhi : xlo + (xhi - xlo) * k / (opts.x_grid - 1);
                const double v = D(x);
                p.sign_ok = p.sign_ok && sgn(v) == s;
                p.min_gap = std::min(p.min_gap, std::abs(v));
            }
            worst = std::min(worst, p.min_gap);
            ok = ok && p.roots_in_claim == 0 && p.sign_ok;
            rep.pairs.push_back(p);
        }
    rep.min_gap = worst;
    rep.passed = ok;
    return rep;
}

} // namespace

double TaylorPoly::operator()(double x) const noexcept
{
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * (x - base) + *it;
    return acc;
}

Polynomial TaylorPoly::monomial() const { return Polynomial::from_shifted(coeffs, base); }

TaylorPoly taylor_poly(const SmoothFunction& f, double t, int n)
{
    check_degree(n, kMaxJetOrder);
    const Jet j = f.jet(t, n);
    return {t, n, std::vector<double>(j.coeffs().begin(), j.coeffs().end())};
}

double taylor_velocity(const SmoothFunction& f, double t, int n, double x)
{
    check_degree(n, kMaxJetOrder - 1);
    const Jet j = f.jet(t, n + 1);
    // f^(n+1)(t) / n! = (n + 1) c[n+1].
    return (n + 1) * j[n + 1] * std::pow(x - t, n);
}

Polynomial taylor_difference(const SmoothFunction& f, double a, double b, int n)
{
    return taylor_poly(f, b, n).monomial() - taylor_poly(f, a, n).monomial();
}

TaylorReport verify_disjoint_even(const SmoothFunction& f, Interval I, int n, const TaylorOptions& opts)
{
    if (n % 2 != 0)
        throw Error(ErrorKind::Usage, "whole-line disjointness needs an even degree");
    check_degree(n, kMaxJetOrder - 1);
    return run_pairs(f, I, n, opts, true);
}

TaylorReport verify_disjoint_odd(const SmoothFunction& f, Interval I, int n, const TaylorOptions& opts)
{
    if (n % 2 == 0)
        throw Error(ErrorKind::Usage, "half-line disjointness needs an odd degree");
    check_degree(n, kMaxJetOrder - 1);
    return run_pairs(f, I, n, opts, false);
}

ConvexityReport difference_higher_convexity(const SmoothFunction& f, double a, double b, int n)
{
    if (n % 2 != 0)
        throw Error(ErrorKind::Usage, "higher convexity is stated for even degree");
    check_degree(n, kMaxJetOrder - 1);
    ConvexityReport rep;
    rep.a = a;
    rep.b = b;
    rep.degree = n;
    rep.difference = taylor_difference(f, a, b, n);
    if (a == b) {
        rep.degenerate = true;
        rep.passed = true;
        return rep;
    }
    // Orientation: with f^(n+1) < 0 every claim holds for -D.
    const int s = sgn(rep.difference.leading());
    if (s == 0 || rep.difference.degree() != n)
        return rep;

    constexpr int kGrid = 401;
    const double mid = 0.5 * (a + b);
    const double half = 2.0 * std::abs(b - a) + 2.0;
    bool ok = true;
    for (int k = 0; k <= n; k += 2) {
        const Polynomial dk = static_cast<double>(s) * rep.difference.derivative(k);
        ConvexityOrder o;
        o.k = k;
        o.real_roots = SturmSequence(dk).count_real_roots();
        o.positive_on_grid = true;
        for (int i = 0; i < kGrid; ++i) {
            const double x = mid - half + 2.0 * half * i / (kGrid - 1);
            o.positive_on_grid = o.positive_on_grid && dk(x) > 0.0;
        }
        ok = ok && o.real_roots == 0 && o.positive_on_grid;
        rep.orders.push_back(o);
    }
    rep.passed = ok;
    return rep;
}

DerivativeZeros count_derivative_zeros(const SmoothFunction& f, int n, Interval window, int grid_n)
{
    if (!std::holds_alternative<GaussianFn>(f.family()))
        throw Error(ErrorKind::Usage, "derivative zero count is defined for the Gaussian family");
    check_degree(n, kMaxJetOrder);
    if (!(window.hi > window.lo))
        throw Error(ErrorKind::Usage, "window needs lo < hi");
    auto dn = [&](double x) { return f.derivative(x, n); };
    DerivativeZeros out;
    out.zeros = sign_change_roots(dn, window.lo, window.hi, {.grid_n = grid_n, .tol = 1e-13});
    // f^(n)(x) = (-1)^n H_n(x) exp(-x^2): positive at -inf, sign (-1)^n at +inf.
    const int at_hi = (n % 2 == 0) ? 1 : -1;
    out.window_warning = sgn(dn(window.lo)) != 1 || sgn(dn(window.hi)) != at_hi;
    return out;
}

} // namespace osc
