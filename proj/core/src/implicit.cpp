#include "osculate/implicit.hpp"

#include "osculate/error.hpp"

#include <cmath>

namespace osc {

namespace {

constexpr int kMaxDegree = 3;

// Dense [xe][ye] grid used for substitutions.
using Grid = std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1>;

Grid grid_mul(const Grid& a, const Grid& b)
{
    Grid r{};
    for (int i = 0; i <= kMaxDegree; ++i)
        for (int j = 0; i + j <= kMaxDegree; ++j) {
            if (a[i][j] == 0.0)
                continue;
            for (int k = 0; i + k <= kMaxDegree; ++k)
                for (int l = 0; i + j + k + l <= kMaxDegree; ++l)
                    r[i + k][j + l] += a[i][j] * b[k][l];
        }
    return r;
}

} // namespace

std::pair<int, int> ImplicitPoly::exponents(int k) noexcept
{
    int d = 0;
    while (monomial_count(d) <= k)
        ++d;
    const int offset = k - monomial_count(d - 1);
    return {d - offset, offset};
}

ImplicitPoly::ImplicitPoly(int degree, std::vector<double> coeffs) : degree_(degree), c_(std::move(coeffs))
{
    if (degree < 0 || degree > kMaxDegree)
        throw Error(ErrorKind::Usage, "implicit polynomial degree must be in [0, 3]");
    if (static_cast<int>(c_.size()) != monomial_count(degree))
        throw Error(ErrorKind::Usage, "implicit polynomial coefficient count does not match degree");
}

double ImplicitPoly::coeff(int xe, int ye) const noexcept
{
    const int d = xe + ye;
    if (d > degree_)
        return 0.0;
    return c_[static_cast<std::size_t>(monomial_count(d - 1) + ye)];
}

double ImplicitPoly::operator()(Point p) const noexcept
{
    double s = 0.0;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        const auto [i, j] = exponents(k);
        s += c_[static_cast<std::size_t>(k)] * std::pow(p.x, i) * std::pow(p.y, j);
    }
    return s;
}

Vec2 ImplicitPoly::gradient(Point p) const noexcept
{
    Vec2 g;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        const auto [i, j] = exponents(k);
        const double c = c_[static_cast<std::size_t>(k)];
        if (i > 0)
            g.x += c * i * std::pow(p.x, i - 1) * std::pow(p.y, j);
        if (j > 0)
            g.y += c * j * std::pow(p.x, i) * std::pow(p.y, j - 1);
    }
    return g;
}

std::vector<Jet> monomial_jets(int degree, const Jet& x, const Jet& y)
{
    std::vector<Jet> xp{Jet::constant(x.base(), x.order(), 1.0)};
    std::vector<Jet> yp{Jet::constant(y.base(), y.order(), 1.0)};
    for (int i = 1; i <= degree; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    std::vector<Jet> out;
    out.reserve(static_cast<std::size_t>(ImplicitPoly::monomial_count(degree)));
    for (int k = 0; k < ImplicitPoly::monomial_count(degree); ++k) {
        const auto [i, j] = ImplicitPoly::exponents(k);
        out.push_back(xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)]);
    }
    return out;
}

Jet ImplicitPoly::compose(const Jet& x, const Jet& y) const
{
    const auto mons = monomial_jets(degree_, x, y);
    Jet r = Jet::constant(x.base(), x.order(), 0.0);
    for (std::size_t k = 0; k < mons.size(); ++k)
        r = r + c_[k] * mons[k];
    return r;
}

ImplicitPoly ImplicitPoly::pulled_back(Point origin, Vec2 e1, Vec2 e2, double scale) const
{
    // u = (e1.x x + e1.y y - dot(origin, e1)) / scale, similarly v.
    Grid u{}, v{};
    u[0][0] = -dot(origin, e1) / scale;
    u[1][0] = e1.x / scale;
    u[0][1] = e1.y / scale;
    v[0][0] = -dot(origin, e2) / scale;
    v[1][0] = e2.x / scale;
    v[0][1] = e2.y / scale;

    std::array<Grid, kMaxDegree + 1> up{}, vp{};
    up[0][0][0] = 1.0;
    vp[0][0][0] = 1.0;
    for (int i = 1; i <= degree_; ++i) {
        up[i] = grid_mul(up[i - 1], u);
        vp[i] = grid_mul(vp[i - 1], v);
    }
    Grid acc{};
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        const auto [i, j] = exponents(k);
        const Grid term = grid_mul(up[i], vp[j]);
        for (int a = 0; a <= kMaxDegree; ++a)
            for (int b = 0; a + b <= kMaxDegree; ++b)
                acc[a][b] += c_[static_cast<std::size_t>(k)] * term[a][b];
    }
    std::vector<double> out(c_.size());
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        const auto [i, j] = exponents(k);
        out[static_cast<std::size_t>(k)] = acc[i][j];
    }
    return ImplicitPoly(degree_, std::move(out));
}

double ImplicitPoly::norm2() const noexcept
{
    double s = 0.0;
    for (double c : c_)
        s += c * c;
    return std::sqrt(s);
}

ImplicitPoly ImplicitPoly::scaled(double s) const
{
    std::vector<double> c = c_;
    for (double& v : c)
        v *= s;
    return ImplicitPoly(degree_, std::move(c));
}

} // namespace osc
