#pragma once

// Test-side numerical oracles, deliberately independent of the library's
// quadrature and root-finding code paths (adaptive Simpson vs
// Gauss-Kronrod, bisection vs Brent).

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

using Fn = std::function<double(double)>;

inline double simpson_panel(double a, double b, double fa, double fm,
                            double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double simpson_rec(const Fn& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel(a, m, fa, flm, fm);
    const double right = simpson_panel(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const Fn& f, double a, double b, double tol = 1e-11,
                        int depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return simpson_rec(f, a, b, fa, fm, fb, simpson_panel(a, b, fa, fm, fb),
                       tol, depth);
}

inline double bisect(const Fn& f, double lo, double hi, double tol = 1e-13,
                     int iters = 300) {
    double flo = f(lo), fhi = f(hi);
    if (flo * fhi > 0.0) throw std::runtime_error("bisect: no sign change");
    for (int i = 0; i < iters && hi - lo > tol * (1.0 + std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (flo * fmid <= 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) /
           std::max(std::abs(want), 1e-300);
}

}  // namespace oracle
