#include "osculate/error.hpp"
#include "osculate/jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace osc;

namespace {

// Central finite-difference estimate of the k-th derivative (test oracle only).
double fd_derivative(const std::function<double(double)>& f, double x, int k, double h)
{
    if (k == 0)
        return f(x);
    return (fd_derivative(f, x + h, k - 1, h) - fd_derivative(f, x - h, k - 1, h)) / (2.0 * h);
}

} // namespace

TEST(Jet, BinomialProduct)
{
    const Jet a(0.0, {1.0, 1.0, 0.0});
    const Jet p = a * a;
    EXPECT_EQ(p[0], 1.0);
    EXPECT_EQ(p[1], 2.0);
    EXPECT_EQ(p[2], 1.0);
}

TEST(Jet, MultiplicativeIdentity)
{
    const Jet a(0.3, {0.7, -1.25, 3.5, 0.125});
    const Jet one = Jet::constant(0.3, 3, 1.0);
    EXPECT_EQ(a * one, a);
}

TEST(Jet, SinSquared)
{
    const Jet s = sin_jet(0.0, 4);
    const Jet s2 = s * s;
    EXPECT_NEAR(s2[0], 0.0, 1e-15);
    EXPECT_NEAR(s2[1], 0.0, 1e-15);
    EXPECT_NEAR(s2[2], 1.0, 1e-15);
    EXPECT_NEAR(s2[3], 0.0, 1e-15);
    EXPECT_NEAR(s2[4], -1.0 / 3.0, 1e-15);
}

TEST(Jet, MismatchedOperandsThrow)
{
    const Jet a(0.0, {1.0, 2.0});
    const Jet b(1.0, {1.0, 2.0});
    const Jet c(0.0, {1.0, 2.0, 3.0});
    try {
        (void)(a * b);
        FAIL() << "expected usage error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Usage);
    }
    EXPECT_THROW((void)(a * c), Error);
    EXPECT_THROW((void)(a + c), Error);
}

TEST(Jet, ComposeWithIdentityOuter)
{
    const Jet inner(0.5, {2.0, 0.3, -0.7, 1.1});
    const Jet outer = Jet::variable(2.0, 3);
    const Jet r = jet_compose(outer, inner);
    for (int i = 0; i <= 3; ++i)
        EXPECT_DOUBLE_EQ(r[i], inner[i]);
    EXPECT_EQ(r.base(), inner.base());
}

TEST(Jet, ComposeExpOfTwoX)
{
    const Jet inner = 2.0 * Jet::variable(0.0, 2);
    const Jet r = jet_compose(exp_jet(0.0, 2), inner);
    EXPECT_DOUBLE_EQ(r[0], 1.0);
    EXPECT_DOUBLE_EQ(r[1], 2.0);
    EXPECT_DOUBLE_EQ(r[2], 2.0);
}

TEST(Jet, ComposeConstantOuter)
{
    const Jet inner(0.0, {1.5, 4.0, 2.0});
    const Jet outer = Jet::constant(1.5, 2, 7.0);
    const Jet r = jet_compose(outer, inner);
    EXPECT_EQ(r[0], 7.0);
    EXPECT_EQ(r[1], 0.0);
    EXPECT_EQ(r[2], 0.0);
}

TEST(Jet, ComposeBaseMismatchThrows)
{
    const Jet inner(0.0, {1.0, 1.0});
    EXPECT_THROW(jet_compose(exp_jet(0.0, 1), inner), Error);
}

TEST(Jet, DerivativeCases)
{
    const Jet c = Jet::constant(0.0, 3, 4.0);
    const Jet dc = jet_derivative(c);
    EXPECT_EQ(dc.order(), 2);
    for (int i = 0; i <= 2; ++i)
        EXPECT_EQ(dc[i], 0.0);

    const Jet cube(1.0, {1.0, 3.0, 3.0, 1.0});
    const Jet d = jet_derivative(cube);
    EXPECT_EQ(d[0], 3.0);
    EXPECT_EQ(d[1], 6.0);
    EXPECT_EQ(d[2], 3.0);

    const Jet q(0.0, {1.0, 2.0, 5.0});
    const Jet dd = jet_derivative(jet_derivative(q));
    EXPECT_EQ(dd.order(), 0);
    EXPECT_EQ(dd[0], 10.0);

    EXPECT_THROW(jet_derivative(Jet::constant(0.0, 0, 1.0)), Error);
}

TEST(Jet, DerivativeExtraction)
{
    const Jet e = exp_jet(0.0, 6);
    for (int i = 0; i <= 6; ++i)
        EXPECT_NEAR(e.derivative(i), 1.0, 1e-14);
}

TEST(JetProperty, ProductCommutesAndAssociatesExactly)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + trial % kMaxJetOrder;
        std::vector<double> ca(k + 1), cb(k + 1), cc(k + 1);
        for (int i = 0; i <= k; ++i) {
            // Dyadic values make every product and sum exact in binary floating point.
            ca[i] = std::ldexp(std::round(u(rng) * 64), -6);
            cb[i] = std::ldexp(std::round(u(rng) * 64), -6);
            cc[i] = std::ldexp(std::round(u(rng) * 64), -6);
        }
        const Jet a(0.5, ca), b(0.5, cb), c(0.5, cc);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(JetProperty, LeibnizRule)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + trial % kMaxJetOrder;
        std::vector<double> ca(k + 1), cb(k + 1);
        for (int i = 0; i <= k; ++i) {
            ca[i] = u(rng);
            cb[i] = u(rng);
        }
        const Jet a(0.0, ca), b(0.0, cb);
        const Jet lhs = jet_derivative(a * b);
        const Jet rhs = jet_derivative(a) * b.truncated(k - 1) + a.truncated(k - 1) * jet_derivative(b);
        for (int i = 0; i < k; ++i)
            EXPECT_NEAR(lhs[i], rhs[i], 1e-12);
    }
}

TEST(JetProperty, ElementaryGeneratorsMatchFiniteDifferences)
{
    struct Gen {
        const char* name;
        std::function<Jet(double, int)> jet;
        std::function<double(double)> f;
    };
    const std::vector<double> poly{0.5, -1.0, 0.25, 2.0, -0.75};
    const std::vector<Gen> gens{
        {"sin", sin_jet, [](double x) { return std::sin(x); }},
        {"cos", cos_jet, [](double x) { return std::cos(x); }},
        {"exp", exp_jet, [](double x) { return std::exp(x); }},
        {"tan", tan_jet, [](double x) { return std::tan(x); }},
        {"poly", [&](double b, int k) { return polynomial_jet(poly, b, k); },
         [&](double x) { return poly[0] + x * (poly[1] + x * (poly[2] + x * (poly[3] + x * poly[4]))); }},
    };
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& g : gens) {
        for (int trial = 0; trial < 20; ++trial) {
            const double x = u(rng);
            const Jet j = g.jet(x, 4);
            for (int k = 1; k <= 4; ++k) {
                // Two Richardson levels over nested central differences, O(h^6).
                const double h = 0.02;
                const double d1 = fd_derivative(g.f, x, k, h);
                const double d2 = fd_derivative(g.f, x, k, h / 2);
                const double d3 = fd_derivative(g.f, x, k, h / 4);
                const double r1 = (4.0 * d2 - d1) / 3.0;
                const double r2 = (4.0 * d3 - d2) / 3.0;
                const double fd = (16.0 * r2 - r1) / 15.0;
                const double exact = j.derivative(k);
                EXPECT_NEAR(exact, fd, 1e-6 * std::max(1.0, std::abs(exact))) << g.name << " k=" << k << " x=" << x;
            }
        }
    }
}

TEST(Jet, DivisionInvertsMultiplication)
{
    const Jet a = exp_jet(0.3, 8);
    const Jet b = cos_jet(0.3, 8);
    const Jet q = (a * b) / b;
    for (int i = 0; i <= 8; ++i)
        EXPECT_NEAR(q[i], a[i], 1e-14);
    EXPECT_THROW(a / Jet::constant(0.3, 8, 0.0), Error);
}

TEST(Jet, SqrtSquaresBack)
{
    const Jet x = Jet::variable(2.0, 6) * Jet::variable(2.0, 6) + 1.0;
    const Jet r = sqrt(x);
    const Jet back = r * r;
    for (int i = 0; i <= 6; ++i)
        EXPECT_NEAR(back[i], x[i], 1e-13);
}
