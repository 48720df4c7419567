#include "osculate/scan.hpp"

#include "osculate/error.hpp"

#include <algorithm>
#include <cmath>

namespace osc {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double tol)
{
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b)
            break;
        const double fm = f(m);
        if (fm == 0.0)
            return m;
        if (sgn(fm) == sgn(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<double> sign_change_roots(const std::function<double(double)>& f, double lo, double hi,
                                      const ScanOptions& opts)
{
    if (opts.grid_n < 2)
        throw Error(ErrorKind::Usage, "root scan needs at least two grid cells");
    if (!(hi > lo))
        throw Error(ErrorKind::Usage, "root scan needs lo < hi");
    const int n = opts.grid_n;
    std::vector<double> ts(static_cast<std::size_t>(n) + 1), vs(ts.size());
    for (int i = 0; i <= n; ++i) {
        ts[i] = (i == n) ? hi : lo + (hi - lo) * i / n;
        vs[i] = f(ts[i]);
    }
    return sign_change_roots(f, ts, std::move(vs), opts);
}

std::vector<double> sign_change_roots(const std::function<double(double)>& f, const std::vector<double>& ts,
                                      std::vector<double> vs, const ScanOptions& opts)
{
    if (ts.size() < 3 || ts.size() != vs.size())
        throw Error(ErrorKind::Usage, "root scan needs matching grids of at least two cells");
    const int n = static_cast<int>(ts.size()) - 1;
    if (opts.periodic)
        vs[static_cast<std::size_t>(n)] = vs[0];

    std::vector<double> roots;
    // Zeros at nodes count once; a run of exact zeros between equal signs is a touch, not a crossing.
    int last = -1;
    for (int i = 0; i <= n; ++i) {
        if (vs[i] == 0.0)
            continue;
        if (last >= 0 && sgn(vs[i]) != sgn(vs[last])) {
            if (i - last > 1)
                roots.push_back(ts[(last + i) / 2]);
            else
                roots.push_back(bisect(f, ts[last], ts[i], vs[last], opts.tol));
        }
        last = i;
    }
    if (last < 0)
        throw Error(ErrorKind::DegenerateFamily, "function vanishes on the whole scan grid");
    if (opts.periodic && vs[0] == 0.0) {
        // lo is a node zero; it is a crossing when the signs around the wrap differ.
        int first = 0;
        while (vs[first] == 0.0)
            ++first;
        if (sgn(vs[last]) != sgn(vs[first]))
            roots.push_back(ts[0]);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace osc
