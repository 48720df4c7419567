#pragma once

// Fractional-linear maps of the projective line, the Schwarzian derivative,
// osculating Moebius maps and the zero count for circle diffeomorphisms.

#include "osculate/function.hpp"
#include "osculate/geometry.hpp"
#include "osculate/report.hpp"

#include <array>
#include <vector>

namespace osc {

/// x -> (a x + b) / (c x + d), normalized to |ad - bc| = 1 with a > 0 (b > 0 when a = 0).
class MoebiusMap {
public:
    MoebiusMap() = default;
    MoebiusMap(double a, double b, double c, double d);

    const std::array<double, 4>& coeffs() const noexcept { return m_; }
    double det() const noexcept { return m_[0] * m_[3] - m_[1] * m_[2]; }

    /// Infinite at the pole.
    double operator()(double x) const noexcept;
    Jet jet(double x, int order) const;
    SmoothFunction as_function() const;

    /// Matrix product this * other, i.e. this o other.
    MoebiusMap compose(const MoebiusMap& other) const;
    MoebiusMap inverse() const;

private:
    std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

/// Lift of a circle diffeomorphism: f(t) = t + sum_k amp[k] sin(mode[k] t + phase[k]),
/// so f(t + 2 pi) = f(t) + 2 pi.
class CircleDiffeo {
public:
    struct Term {
        int mode = 1;
        double amplitude = 0.0;
        double phase = 0.0;
    };

    explicit CircleDiffeo(std::vector<Term> terms = {}, double shift = 0.0);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    double shift() const noexcept { return shift_; }
    Jet jet(double t, int order) const;
    double operator()(double t) const { return jet(t, 0).value(); }

private:
    std::vector<Term> terms_;
    double shift_ = 0.0;
};

/// f'''/f' - 3/2 (f''/f')^2. Throws Singularity where |f'| <= 1e-10.
double schwarzian(const SmoothFunction& f, double x);
double schwarzian(const CircleDiffeo& f, double t);

/// Schwarzian of the diffeomorphism of RP^1 in the chart x = tan(theta / 2),
/// pulled back to the circle coordinate: S(f) + (f'^2 - 1) / 2.
double projective_schwarzian(const CircleDiffeo& f, double t);

/// The Moebius map agreeing with f to second order at t.
MoebiusMap osculating_moebius(const SmoothFunction& f, double t);

/// Graphs in RP^1 x RP^1 are disjoint iff g1 o g2^-1 has no real fixed point.
/// Throws IdenticalMap for projectively equal maps.
bool moebius_graphs_disjoint(const MoebiusMap& g1, const MoebiusMap& g2);

/// (d - a)^2 + 4 b c of g1 o g2^-1; negative iff the graphs are disjoint.
double moebius_fixed_point_discriminant(const MoebiusMap& g1, const MoebiusMap& g2);

/// Samples n_samples points of I, requires a nonvanishing Schwarzian and
/// checks pairwise disjointness of the osculating Moebius graphs. Disjoint
/// pairs are reported as DisjointUnclassified, meeting ones as Intersecting.
NestingReport verify_moebius_nesting(const SmoothFunction& f, Interval I, int n_samples);

struct SchwarzianZeros {
    std::vector<double> zeros;
    /// Projective Schwarzian identically zero (a rotation).
    bool degenerate = false;

    int count() const noexcept { return static_cast<int>(zeros.size()); }
};

/// Sign changes of the projective Schwarzian over one period.
SchwarzianZeros schwarzian_zero_count(const CircleDiffeo& f, int grid_n = 2048);

} // namespace osc
