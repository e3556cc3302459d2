#pragma once

#include <functional>

namespace agint {

// Adaptive Gauss-Kronrod (7-15) integration on a finite interval.
// The interval is bisected until the embedded error estimate meets
// rel_tol (relative to the running total) or abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 0.0,
                 int max_depth = 52);

// Integrate over [a, b] with interior breakpoints, e.g. around a known
// peak of the integrand. Breakpoints outside (a, b) are ignored.
double integrate_segmented(const std::function<double(double)>& f, double a,
                           double b, std::initializer_list<double> breaks,
                           double rel_tol = 1e-10, double abs_tol = 0.0);

// Bracketing root finder (Brent). Requires f(a) and f(b) of opposite sign.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13, int max_iter = 200);

}  // namespace agint
