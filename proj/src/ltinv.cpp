#include "agint/ltinv.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agint/errors.hpp"

namespace agint::ltinv {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Fixed-Talbot contour (Abate-Valko). Nodes s_k = r th_k (cot th_k + i),
// r = 2M / (5t).
double talbot(const LaplaceFn& F, double t, int m) {
    const double r = 2.0 * m / (5.0 * t);
    double sum = 0.5 * std::exp(r * t) * F(std::complex<double>(r, 0.0)).real();
    for (int k = 1; k < m; ++k) {
        const double th = k * kPi / m;
        const double cot = std::cos(th) / std::sin(th);
        const std::complex<double> s(r * th * cot, r * th);
        const double sigma = th + (th * cot - 1.0) * cot;
        const std::complex<double> w =
            std::exp(s * t) * F(s) * std::complex<double>(1.0, sigma);
        sum += w.real();
    }
    return sum * r / m;
}

// Bromwich trapezoid with Euler acceleration (Abate-Whitt).
double euler(const LaplaceFn& F, double t, int m, double precision) {
    // Discretization error ~ e^-a; the e^(a/2) prefactor amplifies
    // roundoff, so a is kept as small as the target allows.
    const double a = std::min(-std::log(precision) + 5.0, 30.0);
    const int n_pre = m;           // straight terms before acceleration
    const int n_euler = m / 2;     // binomially averaged terms
    const double pre = std::exp(0.5 * a) / t;

    auto term = [&](int k) {
        if (k == 0)
            return 0.5 * pre * F(std::complex<double>(0.5 * a / t, 0.0)).real();
        const std::complex<double> s(0.5 * a / t, k * kPi / t);
        return ((k % 2) ? -pre : pre) * F(s).real();
    };

    double partial = 0.0;
    for (int k = 0; k <= n_pre; ++k) partial += term(k);

    // Binomial average of the partial sums s_{n_pre}, ..., s_{n_pre+n_euler}.
    double accel = 0.0;
    double binom = 1.0;  // C(n_euler, j) built incrementally
    double binom_sum = 0.0;
    for (int j = 0; j <= n_euler; ++j) {
        accel += binom * partial;
        binom_sum += binom;
        if (j < n_euler) {
            partial += term(n_pre + j + 1);
            binom *= static_cast<double>(n_euler - j) / (j + 1);
        }
    }
    return accel / binom_sum;
}

}  // namespace

double invert_with(const LaplaceFn& transform, double t,
                   const InversionConfig& cfg, Method method) {
    if (!(t > 0.0)) throw math_domain_error("invert: requires t > 0");
    if (cfg.talbot_nodes < 8 || cfg.euler_nodes < 8)
        throw config_error("invert: node_count must be >= 8");
    return method == Method::talbot
               ? talbot(transform, t, cfg.talbot_nodes)
               : euler(transform, t, cfg.euler_nodes, cfg.precision_target);
}

double invert(const LaplaceFn& transform, double t, const InversionConfig& cfg) {
    const double vt = invert_with(transform, t, cfg, Method::talbot);
    const double ve = invert_with(transform, t, cfg, Method::euler_summation);
    const double tol =
        10.0 * cfg.precision_target * std::abs(vt) + cfg.agreement_floor;
    if (std::abs(vt - ve) > tol)
        throw convergence_error("invert: Talbot and Euler summation disagree");
    return vt;
}

std::vector<double> invert_grid(const LaplaceFn& transform,
                                const std::vector<double>& t_grid,
                                const InversionConfig& cfg, bool parallel) {
    std::vector<double> out(t_grid.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(t_grid.size()); ++i)
            out[i] = invert(transform, t_grid[i], cfg);
    } else {
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            out[i] = invert(transform, t_grid[i], cfg);
    }
    return out;
}

LaplaceFn stable_lt(double scale_k, double eta) {
    return [scale_k, eta](std::complex<double> s) {
        return std::exp(-scale_k * std::exp(eta * std::log(s)));
    };
}

double invert_stable(double scale_k, double eta, double t,
                     const InversionConfig& cfg) {
    if (!(t > 0.0)) throw math_domain_error("invert_stable: requires t > 0");
    if (t < 1e-3) {
        // Stability rescaling: if I has scale K then I/a has scale K a^-eta.
        const double a = t;  // map the evaluation point to t' = 1
        const double k_scaled = scale_k * std::pow(a, -eta);
        return invert_stable(k_scaled, eta, 1.0, cfg) / a;
    }
    // The natural density magnitude is 1/K^(1/eta); deep-tail values far
    // below it are contour noise in double precision, so the agreement
    // check carries a floor at that scale instead of the generic one.
    InversionConfig scaled = cfg;
    scaled.agreement_floor = 1e-7 * std::pow(scale_k, -1.0 / eta);
    return invert(stable_lt(scale_k, eta), t, scaled);
}

}  // namespace agint::ltinv
