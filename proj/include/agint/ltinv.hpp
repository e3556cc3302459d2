#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace agint::ltinv {

// Transform evaluable on the cut plane Re(s) > 0 (both contours also
// probe Re(s) < 0 off the negative real axis).
using LaplaceFn = std::function<std::complex<double>(std::complex<double>)>;

enum class Method { talbot, euler_summation };

struct InversionConfig {
    // Fixed-Talbot roundoff grows with node count in double precision;
    // 24 nodes is near the accuracy optimum for these transforms.
    int talbot_nodes = 24;
    int euler_nodes = 40;
    double precision_target = 1e-8;
    // Disagreements below this absolute level are not flagged (deep-tail
    // values where double precision cannot resolve relative error).
    double agreement_floor = 1e-13;
};

// Single-method inversion at t > 0.
double invert_with(const LaplaceFn& transform, double t,
                   const InversionConfig& cfg, Method method);

// Dual-method inversion: fixed-Talbot value checked against Euler
// summation; throws convergence_error when the two disagree beyond
// 10 * precision_target (relative, with agreement_floor absolute slack).
double invert(const LaplaceFn& transform, double t,
              const InversionConfig& cfg = {});

// Vectorized invert; evaluated in parallel with deterministic ordering.
std::vector<double> invert_grid(const LaplaceFn& transform,
                                const std::vector<double>& t_grid,
                                const InversionConfig& cfg = {},
                                bool parallel = true);

// LT of the one-sided stable law: s -> exp(-K s^eta), principal branch.
LaplaceFn stable_lt(double scale_k, double eta);

// Inverts exp(-K s^eta) at t, rescaling small t through the stability
// property (contour methods degrade near t = 0).
double invert_stable(double scale_k, double eta, double t,
                     const InversionConfig& cfg = {});

}  // namespace agint::ltinv
