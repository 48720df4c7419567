#include "osculate/sampling.hpp"

#include <cmath>
#include <numbers>

namespace osc {

PlaneCurve random_fourier_oval(Rng& rng)
{
    constexpr int kModes = 4;
    std::vector<double> a(kModes), b(kModes);
    double l1 = 0.0, weighted = 0.0;
    for (int k = 0; k < kModes; ++k) {
        a[k] = uniform(rng, -1.0, 1.0);
        b[k] = uniform(rng, -1.0, 1.0);
        const double w = 1.0 + (k + 1.0) * (k + 1.0);
        l1 += std::abs(a[k]) + std::abs(b[k]);
        weighted += w * (std::abs(a[k]) + std::abs(b[k]));
    }
    const double target = uniform(rng, 0.3, 1.0);
    const double scale = target * std::min(0.2 / l1, 0.9 / weighted);
    for (int k = 0; k < kModes; ++k) {
        a[k] *= scale;
        b[k] *= scale;
    }
    return PlaneCurve::fourier_oval(std::move(a), std::move(b));
}

std::vector<PlaneCurve> fourier_oval_batch(std::uint64_t seed, int count)
{
    std::vector<PlaneCurve> out;
    out.reserve(static_cast<std::size_t>(count));
    Rng master(seed);
    for (int i = 0; i < count; ++i) {
        Rng rng(master());
        out.push_back(random_fourier_oval(rng));
    }
    return out;
}

CircleDiffeo random_circle_diffeo(Rng& rng)
{
    constexpr int kModes = 3;
    std::vector<CircleDiffeo::Term> terms;
    double weighted = 0.0;
    for (int k = 1; k <= kModes; ++k) {
        const double amp = uniform(rng, -1.0, 1.0);
        const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        terms.push_back({k, amp, phase});
        weighted += k * std::abs(amp);
    }
    const double scale = uniform(rng, 0.2, 0.9) / weighted;
    for (auto& t : terms)
        t.amplitude *= scale;
    const double shift = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    return CircleDiffeo(std::move(terms), shift);
}

std::vector<CircleDiffeo> circle_diffeo_batch(std::uint64_t seed, int count)
{
    std::vector<CircleDiffeo> out;
    out.reserve(static_cast<std::size_t>(count));
    Rng master(seed);
    for (int i = 0; i < count; ++i) {
        Rng rng(master());
        out.push_back(random_circle_diffeo(rng));
    }
    return out;
}

} // namespace osc
