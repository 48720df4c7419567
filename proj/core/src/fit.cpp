#include "osculate/fit.hpp"

#include "osculate/error.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace osc {

namespace {

// Coefficient i multiplied by lambda^i: the jet in the parameter sigma = (t - base) / lambda.
Jet reparameterized(const Jet& a, double lambda)
{
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    double s = 1.0;
    for (auto& v : c) {
        v *= s;
        s *= lambda;
    }
    return Jet(a.base(), c);
}

double poly_norm(const ImplicitPoly& p)
{
    if (p.degree() != 2)
        return std::sqrt(p.norm2());
    // Symmetric matrix [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]].
    const auto& c = p.coeffs();
    const double diag = c[0] * c[0] + c[3] * c[3] + c[5] * c[5];
    const double off = c[1] * c[1] + c[2] * c[2] + c[4] * c[4];
    return std::sqrt(diag + 0.5 * off);
}

} // namespace

OsculatingFit osculating_fit(const PlaneCurve& c, double t, int degree, double degenerate_ratio)
{
    if (degree != 2 && degree != 3)
        throw Error(ErrorKind::Usage, "osculating fit supports degree 2 and 3");
    const int K = ImplicitPoly::monomial_count(degree);
    const int m = K - 1;
    const CurveJet2 j = c.jet(t, m);

    const Vec2 d1 = j.derivative(1);
    const Vec2 d2 = j.derivative(2);
    const double speed = norm(d1);
    if (speed < 1e-12)
        throw Error(ErrorKind::Singularity, "curve is not regular at the fit point");
    const double kappa = cross(d1, d2) / (speed * speed * speed);
    if (std::abs(kappa) <= 1e-10)
        throw Error(ErrorKind::FlatPoint, "curve is locally a line; no osculating conic or cubic");
    const double rho = 1.0 / std::abs(kappa);
    const Vec2 T = (1.0 / speed) * d1;
    const Vec2 N = perp(T);
    const Point p = j.position();

    const double lambda = rho / speed;
    const Jet dx = reparameterized(j.x - p.x, lambda);
    const Jet dy = reparameterized(j.y - p.y, lambda);
    const Jet u = (1.0 / rho) * (T.x * dx + T.y * dy);
    const Jet v = (1.0 / rho) * (N.x * dx + N.y * dy);
    const std::vector<Jet> mono = monomial_jets(degree, u, v);

    Eigen::MatrixXd M(m, K);
    Eigen::RowVectorXd next(K);
    for (int k = 0; k < K; ++k) {
        for (int i = 0; i < m; ++i)
            M(i, k) = mono[static_cast<std::size_t>(k)][i];
        next(k) = mono[static_cast<std::size_t>(k)][m];
    }
    for (int i = 0; i < m; ++i) {
        const double rn = M.row(i).norm();
        if (rn > 0.0)
            M.row(i) /= rn;
    }

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const Eigen::VectorXd null = svd.matrixV().col(K - 1);

    OsculatingFit fit;
    fit.singular_values.assign(sv.data(), sv.data() + sv.size());
    fit.conditioning = sv(m - 1) / sv(0);
    fit.degenerate = fit.conditioning < degenerate_ratio;
    const double nn = next.norm();
    fit.relative_residual = nn > 0.0 ? std::abs(next.dot(null)) / nn : 0.0;

    const ImplicitPoly local(degree, std::vector<double>(null.data(), null.data() + null.size()));
    ImplicitPoly global = local.pulled_back(p, T, N, rho);
    global = global.scaled(1.0 / poly_norm(global));

    fit.base_point = p;
    fit.probe = p + (1e-3 * rho * (kappa > 0.0 ? 1.0 : -1.0)) * N;
    if (global(fit.probe) > 0.0)
        global = global.scaled(-1.0);
    fit.residual = global.compose(j.x, j.y)[m];
    fit.poly = std::move(global);
    return fit;
}

} // namespace osc
