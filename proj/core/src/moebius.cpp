#include "osculate/moebius.hpp"

#include "osculate/error.hpp"
#include "osculate/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace osc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

double schwarzian_of(const Jet& j)
{
    const double f1 = j.derivative(1), f2 = j.derivative(2), f3 = j.derivative(3);
    if (std::abs(f1) <= 1e-10)
        throw Error(ErrorKind::Singularity, "Schwarzian undefined at a critical point");
    const double r = f2 / f1;
    return f3 / f1 - 1.5 * r * r;
}

// g1 adj(g2), the matrix of g1 o g2^-1 up to scale.
std::array<double, 4> quotient(const MoebiusMap& g1, const MoebiusMap& g2)
{
    const auto [a1, b1, c1, d1] = g1.coeffs();
    const auto [a2, b2, c2, d2] = g2.coeffs();
    return {a1 * d2 - b1 * c2, -a1 * b2 + b1 * a2, c1 * d2 - d1 * c2, -c1 * b2 + d1 * a2};
}

} // namespace

MoebiusMap::MoebiusMap(double a, double b, double c, double d) : m_{a, b, c, d}
{
    const double det = a * d - b * c;
    if (!std::isfinite(det) || std::abs(det) <= 1e-300)
        throw Error(ErrorKind::Usage, "Moebius map needs ad - bc != 0");
    double s = 1.0 / std::sqrt(std::abs(det));
    if (a < 0.0 || (a == 0.0 && b < 0.0))
        s = -s;
    for (auto& v : m_)
        v *= s;
}

double MoebiusMap::operator()(double x) const noexcept
{
    const double den = m_[2] * x + m_[3];
    if (den == 0.0)
        return std::numeric_limits<double>::infinity();
    return (m_[0] * x + m_[1]) / den;
}

Jet MoebiusMap::jet(double x, int order) const { return as_function().jet(x, order); }

SmoothFunction MoebiusMap::as_function() const { return SmoothFunction::fractional_linear(m_[0], m_[1], m_[2], m_[3]); }

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const
{
    const auto [a, b, c, d] = m_;
    const auto [e, f, g, h] = o.m_;
    return {a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h};
}

MoebiusMap MoebiusMap::inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

CircleDiffeo::CircleDiffeo(std::vector<Term> terms, double shift) : terms_(std::move(terms)), shift_(shift)
{
    for (const auto& t : terms_)
        if (t.mode < 1)
            throw Error(ErrorKind::Usage, "circle diffeomorphism modes must be positive integers");
    constexpr int kGrid = 512;
    for (int i = 0; i < kGrid; ++i) {
        const double t = kTwoPi * i / kGrid;
        if (!(jet(t, 1)[1] > 0.0))
            throw Error(ErrorKind::Usage, "lift is not increasing; not a circle diffeomorphism");
    }
}

Jet CircleDiffeo::jet(double t, int order) const
{
    const Jet v = Jet::variable(t, order);
    Jet acc = v + shift_;
    for (const auto& term : terms_)
        acc = acc + term.amplitude * sin(static_cast<double>(term.mode) * v + term.phase);
    return acc;
}

double schwarzian(const SmoothFunction& f, double x) { return schwarzian_of(f.jet(x, 3)); }

double schwarzian(const CircleDiffeo& f, double t) { return schwarzian_of(f.jet(t, 3)); }

double projective_schwarzian(const CircleDiffeo& f, double t)
{
    const Jet j = f.jet(t, 3);
    const double f1 = j.derivative(1);
    return schwarzian_of(j) + 0.5 * (f1 * f1 - 1.0);
}

MoebiusMap osculating_moebius(const SmoothFunction& f, double t)
{
    const Jet j = f.jet(t, 2);
    const double f0 = j.derivative(0), f1 = j.derivative(1), f2 = j.derivative(2);
    if (std::abs(f1) <= 1e-10)
        throw Error(ErrorKind::Singularity, "no osculating Moebius map at a critical point");
    // g(x) = f0 + f1 (x - t) / (1 - k (x - t)) with k = f2 / (2 f1), scaled by 2 f1.
    const double a = 2.0 * f1 * f1 - f0 * f2;
    const double b = 2.0 * f1 * f0 - a * t;
    const double c = -f2;
    const double d = 2.0 * f1 + f2 * t;
    return {a, b, c, d};
}

double moebius_fixed_point_discriminant(const MoebiusMap& g1, const MoebiusMap& g2)
{
    auto [a, b, c, d] = quotient(g1, g2);
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(b) <= 1e-12 * scale && std::abs(c) <= 1e-12 * scale && std::abs(a - d) <= 1e-12 * scale)
        throw Error(ErrorKind::IdenticalMap, "Moebius maps are projectively equal");
    return (d - a) * (d - a) + 4.0 * b * c;
}

bool moebius_graphs_disjoint(const MoebiusMap& g1, const MoebiusMap& g2)
{
    // A negative discriminant forces b c < 0, so c != 0 and infinity is not fixed either.
    return moebius_fixed_point_discriminant(g1, g2) < 0.0;
}

NestingReport verify_moebius_nesting(const SmoothFunction& f, Interval I, int n_samples)
{
    if (!(I.hi > I.lo))
        throw Error(ErrorKind::Usage, "interval needs lo < hi");
    if (n_samples < 1)
        throw Error(ErrorKind::Usage, "need at least one sample");
    NestingReport rep;
    rep.hypothesis_name = "schwarzian_nonvanishing";
    for (int i = 0; i < n_samples; ++i)
        rep.samples.push_back(n_samples == 1 ? I.lo : (i == n_samples - 1 ? I.hi : I.lo + I.length() * i / (n_samples - 1)));

    constexpr int kGrid = 512;
    auto S = [&](double x) { return schwarzian(f, x); };
    int s0 = 0;
    double prev = I.lo;
    for (int i = 0; i <= kGrid; ++i) {
        const double x = (i == kGrid) ? I.hi : I.lo + I.length() * i / kGrid;
        const double v = S(x);
        const int s = std::abs(v) <= 1e-10 ? 0 : sgn(v);
        if (s == 0 || (s0 != 0 && s != s0)) {
            double where = x;
            if (s != 0) {
                double a = prev, b = x;
                while (b - a > 1e-12) {
                    const double m = 0.5 * (a + b);
                    if (sgn(S(m)) == s0)
                        a = m;
                    else
                        b = m;
                }
                where = 0.5 * (a + b);
            }
            rep.hypothesis_holds = false;
            rep.failure = HypothesisFailure{where, s == 0 ? "Schwarzian vanishes" : "Schwarzian changes sign"};
            return rep;
        }
        s0 = s;
        prev = x;
    }
    rep.hypothesis_holds = true;
    rep.metrics["schwarzian_sign"] = s0;

    const std::size_t n = rep.samples.size();
    if (n < 2) {
        rep.degenerate = true;
        rep.passed = true;
        rep.worst_margin = std::numeric_limits<double>::quiet_NaN();
        rep.notes.push_back("fewer than two samples; the pairwise claim is vacuous");
        return rep;
    }
    std::vector<MoebiusMap> maps;
    for (double t : rep.samples)
        maps.push_back(osculating_moebius(f, t));
    rep.verdicts.assign(n, std::vector<std::optional<PairRelation>>(n));
    double worst = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double disc = moebius_fixed_point_discriminant(maps[i], maps[j]);
            const PairRelation r = disc < 0.0 ? PairRelation::DisjointUnclassified : PairRelation::Intersecting;
            rep.verdicts[i][j] = r;
            rep.verdicts[j][i] = r;
            ok = ok && disc < 0.0;
            worst = std::min(worst, -disc);
        }
    rep.worst_margin = worst;
    rep.passed = ok;
    return rep;
}

SchwarzianZeros schwarzian_zero_count(const CircleDiffeo& f, int grid_n)
{
    if (grid_n < 16)
        throw Error(ErrorKind::Usage, "Schwarzian scan needs grid_n >= 16");
    SchwarzianZeros out;
    auto S = [&](double t) { return projective_schwarzian(f, t); };
    double peak = 0.0;
    for (int i = 0; i < grid_n; ++i)
        peak = std::max(peak, std::abs(S(kTwoPi * i / grid_n)));
    if (peak <= 1e-12) {
        out.degenerate = true;
        return out;
    }
    out.zeros = sign_change_roots(S, 0.0, kTwoPi, {.grid_n = grid_n, .tol = 1e-12, .periodic = true});
    return out;
}

} // namespace osc
