#pragma once

// Seeded generators for randomized sweeps. Every draw goes through
// uniform01, which maps raw 64-bit engine output to [0, 1) the same way on
// every standard library, so a seed fixes the output bit for bit.

#include "osculate/curve.hpp"
#include "osculate/moebius.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace osc {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Strictly convex radial perturbation of the unit circle with modes 1..4,
/// sum |coeff| <= 0.2 and sum |coeff| (1 + k^2) <= 0.9.
PlaneCurve random_fourier_oval(Rng& rng);

/// `count` ovals from one seed; instance i is the same regardless of count.
std::vector<PlaneCurve> fourier_oval_batch(std::uint64_t seed, int count);

/// t + sum_k eps_k sin(k t + phi_k), k = 1..3, with sum_k k |eps_k| <= 0.9 so f' >= 0.1.
CircleDiffeo random_circle_diffeo(Rng& rng);

std::vector<CircleDiffeo> circle_diffeo_batch(std::uint64_t seed, int count);

} // namespace osc
