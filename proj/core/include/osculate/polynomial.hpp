#pragma once

// Dense univariate polynomials and Sturm-sequence real-root counting.

#include <span>
#include <vector>

namespace osc {

/// Coefficients in ascending powers of x.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    /// Monomial-basis form of sum_i c[i] (x - center)^i.
    static Polynomial from_shifted(std::span<const double> c, double center);

    /// Degree after dropping exactly-zero leading coefficients; -1 for the zero polynomial.
    int degree() const noexcept;
    const std::vector<double>& coeffs() const noexcept { return c_; }
    double leading() const noexcept;
    bool is_zero() const noexcept { return degree() < 0; }
    double max_abs_coeff() const noexcept;

    double operator()(double x) const noexcept;
    Polynomial derivative() const;
    Polynomial derivative(int k) const;

    /// Drops leading coefficients below rel_drop * max|coeff|.
    Polynomial trimmed(double rel_drop) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& a);

private:
    std::vector<double> c_;
};

struct Division {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division; the remainder is trimmed relative to the dividend's scale.
Division divide(const Polynomial& num, const Polynomial& den, double rel_drop = 1e-12);

/// Sturm chain p, p', -rem(...), ... with every member rescaled to unit max
/// coefficient and leading coefficients below rel_drop * max treated as zero.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p, double rel_drop = 1e-12);

    int sign_changes_at(double x) const;
    int sign_changes_at_neg_inf() const;
    int sign_changes_at_pos_inf() const;

    /// Distinct real roots on the whole line.
    int count_real_roots() const;
    /// Distinct real roots in the half-open interval (a, b].
    int count_roots(double a, double b) const;

    /// Roots in (a, b], each refined to |width| < tol.
    std::vector<double> isolate_roots(double a, double b, double tol = 1e-12) const;
    std::vector<double> real_roots(double tol = 1e-12) const;

    const std::vector<Polynomial>& chain() const noexcept { return chain_; }

private:
    std::vector<Polynomial> chain_;
};

/// Cauchy bound: every real root lies in [-B, B].
double root_bound(const Polynomial& p);

} // namespace osc
