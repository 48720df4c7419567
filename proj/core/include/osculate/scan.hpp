#pragma once

// Sign-change root finding on a uniform grid.

#include <functional>
#include <vector>

namespace osc {

struct ScanOptions {
    int grid_n = 2048;
    /// Bisection stops below this interval width.
    double tol = 1e-12;
    /// Treat [lo, hi] as one period: hi and lo are the same point.
    bool periodic = false;
};

/// Roots of `f` on [lo, hi] located as sign changes between grid nodes (or
/// exact zeros at nodes), each refined by bisection. Sorted ascending.
std::vector<double> sign_change_roots(const std::function<double(double)>& f, double lo, double hi,
                                      const ScanOptions& opts = {});

/// Same, with the grid values already computed: ts[i] = lo + (hi - lo) i / n, vs[i] = f(ts[i]).
std::vector<double> sign_change_roots(const std::function<double(double)>& f, const std::vector<double>& ts,
                                      std::vector<double> vs, const ScanOptions& opts = {});

} // namespace osc
