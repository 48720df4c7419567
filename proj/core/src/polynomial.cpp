#include "osculate/polynomial.hpp"

#include "osculate/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace osc {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int count_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

Polynomial normalized(const Polynomial& p)
{
    const double m = p.max_abs_coeff();
    if (m == 0.0)
        return p;
    return (1.0 / m) * p;
}

} // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

Polynomial Polynomial::from_shifted(std::span<const double> c, double center)
{
    // Horner with the linear factor (x - center).
    const Polynomial lin({-center, 1.0});
    Polynomial r;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * lin + Polynomial({*it});
    return r;
}

int Polynomial::degree() const noexcept
{
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (c_[static_cast<std::size_t>(i)] != 0.0)
            return i;
    return -1;
}

double Polynomial::leading() const noexcept
{
    const int d = degree();
    return d < 0 ? 0.0 : c_[static_cast<std::size_t>(d)];
}

double Polynomial::max_abs_coeff() const noexcept
{
    double m = 0.0;
    for (double v : c_)
        m = std::max(m, std::abs(v));
    return m;
}

double Polynomial::operator()(double x) const noexcept
{
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return Polynomial({0.0});
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = static_cast<double>(i) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::derivative(int k) const
{
    Polynomial r = *this;
    for (int i = 0; i < k; ++i)
        r = r.derivative();
    return r;
}

Polynomial Polynomial::trimmed(double rel_drop) const
{
    const double thresh = rel_drop * max_abs_coeff();
    std::vector<double> c = c_;
    while (!c.empty() && std::abs(c.back()) <= thresh)
        c.pop_back();
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.c_.empty() || b.c_.empty())
        return Polynomial();
    std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a)
{
    std::vector<double> c = a.c_;
    for (double& v : c)
        v *= s;
    return Polynomial(std::move(c));
}

Division divide(const Polynomial& num, const Polynomial& den, double rel_drop)
{
    const Polynomial d = den.trimmed(rel_drop);
    const int dd = d.degree();
    if (dd < 0)
        throw Error(ErrorKind::Usage, "polynomial division by zero");
    std::vector<double> r = num.coeffs();
    const int nd = num.degree();
    if (nd < dd)
        return {Polynomial({0.0}), num};
    std::vector<double> q(static_cast<std::size_t>(nd - dd + 1), 0.0);
    const double lead = d.coeffs()[static_cast<std::size_t>(dd)];
    for (int k = nd - dd; k >= 0; --k) {
        const double f = r[static_cast<std::size_t>(k + dd)] / lead;
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k + j)] -= f * d.coeffs()[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(k + dd)] = 0.0;
    }
    r.resize(static_cast<std::size_t>(dd));
    // Entries that cancelled to rounding noise are zero for degree decisions.
    const double scale = std::max(num.max_abs_coeff(), 1e-300);
    Polynomial rem(std::move(r));
    std::vector<double> rc = rem.coeffs();
    for (double& v : rc)
        if (std::abs(v) <= rel_drop * scale)
            v = 0.0;
    return {Polynomial(std::move(q)), Polynomial(std::move(rc)).trimmed(0.0)};
}

SturmSequence::SturmSequence(const Polynomial& p, double rel_drop)
{
    Polynomial p0 = normalized(p.trimmed(rel_drop));
    if (p0.degree() < 0)
        throw Error(ErrorKind::Usage, "Sturm sequence of the zero polynomial");
    chain_.push_back(p0);
    if (p0.degree() == 0)
        return;
    chain_.push_back(normalized(p0.derivative().trimmed(rel_drop)));
    while (chain_.back().degree() > 0) {
        const Polynomial& a = chain_[chain_.size() - 2];
        const Polynomial& b = chain_.back();
        Polynomial r = divide(a, b, rel_drop).remainder;
        if (r.degree() < 0)
            break;
        chain_.push_back(normalized((-1.0) * r));
    }
}

int SturmSequence::sign_changes_at(double x) const
{
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_)
        s.push_back(sign_of(p(x)));
    return count_changes(s);
}

int SturmSequence::sign_changes_at_pos_inf() const
{
    std::vector<int> s;
    for (const auto& p : chain_)
        s.push_back(sign_of(p.leading()));
    return count_changes(s);
}

int SturmSequence::sign_changes_at_neg_inf() const
{
    std::vector<int> s;
    for (const auto& p : chain_) {
        const int d = p.degree();
        s.push_back(sign_of(p.leading()) * (d % 2 == 0 ? 1 : -1));
    }
    return count_changes(s);
}

int SturmSequence::count_real_roots() const
{
    return sign_changes_at_neg_inf() - sign_changes_at_pos_inf();
}

int SturmSequence::count_roots(double a, double b) const
{
    if (b < a)
        throw Error(ErrorKind::Usage, "Sturm interval with b < a");
    return sign_changes_at(a) - sign_changes_at(b);
}

std::vector<double> SturmSequence::isolate_roots(double a, double b, double tol) const
{
    std::vector<double> roots;
    std::function<void(double, double, int)> rec = [&](double lo, double hi, int n) {
        if (n <= 0)
            return;
        const double mid0 = 0.5 * (lo + hi);
        if (hi - lo < tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi))) || mid0 <= lo || mid0 >= hi) {
            roots.push_back(mid0);
            return;
        }
        if (n == 1) {
            const Polynomial& p = chain_.front();
            double flo = p(lo), fhi = p(hi);
            if (sign_of(fhi) == 0) {
                roots.push_back(hi);
                return;
            }
            // A single root with no sign change is a multiple root; fall through to halving.
            if (sign_of(flo) != sign_of(fhi) && sign_of(flo) != 0) {
                while (hi - lo > tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid <= lo || mid >= hi)
                        break;
                    const double fm = p(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (sign_of(fm) == sign_of(flo)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push_back(0.5 * (lo + hi));
                return;
            }
        }
        const double mid = 0.5 * (lo + hi);
        const int left = std::clamp(count_roots(lo, mid), 0, n);
        rec(lo, mid, left);
        rec(mid, hi, n - left);
    };
    rec(a, b, count_roots(a, b));
    return roots;
}

std::vector<double> SturmSequence::real_roots(double tol) const
{
    const double bound = root_bound(chain_.front()) + 1.0;
    return isolate_roots(-bound, bound, tol);
}

double root_bound(const Polynomial& p)
{
    const int d = p.degree();
    if (d <= 0)
        return 0.0;
    const double lead = std::abs(p.leading());
    double m = 0.0;
    for (int i = 0; i < d; ++i)
        m = std::max(m, std::abs(p.coeffs()[static_cast<std::size_t>(i)]) / lead);
    return 1.0 + m;
}

} // namespace osc
