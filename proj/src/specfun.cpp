#include "agint/specfun.hpp"

#include <cmath>
#include <limits>

#include "agint/errors.hpp"
#include "agint/quadrature.hpp"

namespace agint::specfun {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return a;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Continued fraction for Gamma(a, x) * exp(x) * x^(-a), modified Lentz.
// Convergent for x >= a + 1 (and for x >= 1 when a <= 0 is small).
double upper_gamma_cf(double a, double x, const Accuracy& acc) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= acc.max_terms * 4; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) <= acc.rel_tol) return h;
    }
    throw convergence_error("upper_incomplete_gamma: continued fraction stalled");
}

// Series for gamma(a, x) * exp(x) * x^(-a) / Gamma(a) ... returned here
// unnormalized: gamma(a, x) = x^a e^-x * sum_{n>=0} x^n / (a (a+1)...(a+n)).
double lower_gamma_series(double a, double x, const Accuracy& acc) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < acc.max_terms * 4; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) <= std::abs(sum) * acc.rel_tol)
            return sum * std::exp(-x + a * std::log(x));
    }
    throw convergence_error("lower_incomplete_gamma: series stalled");
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw math_domain_error("gamma_fn: pole at nonpositive integer");
    if (x < 0.5)
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    const double z = x - 1.0;
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) *
           lanczos_sum(z);
}

double log_gamma(double x) {
    if (is_nonpositive_integer(x))
        throw math_domain_error("log_gamma: pole at nonpositive integer");
    if (x < 0.5)
        return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

double exp_integral_e1(double x, Accuracy acc) {
    if (x <= 0.0) throw math_domain_error("exp_integral_e1: requires x > 0");
    if (x <= 1.0) {
        double sum = -kEulerGamma - std::log(x);
        double term = 1.0;
        for (int n = 1; n < acc.max_terms; ++n) {
            term *= -x / n;
            const double add = -term / n;
            sum += add;
            if (std::abs(add) <= std::abs(sum) * acc.rel_tol) return sum;
        }
        throw convergence_error("exp_integral_e1: series stalled");
    }
    return std::exp(-x) * upper_gamma_cf(0.0, x, acc);
}

double upper_incomplete_gamma(double a, double x, Accuracy acc) {
    if (x < 0.0)
        throw math_domain_error("upper_incomplete_gamma: requires x >= 0");
    if (x == 0.0) {
        if (a <= 0.0)
            throw math_domain_error(
                "upper_incomplete_gamma: divergent at x = 0 for a <= 0");
        return gamma_fn(a);
    }
    if (a == 0.0) return exp_integral_e1(x, acc);
    if (a > 0.0) {
        if (x < a + 1.0)
            return gamma_fn(a) - lower_gamma_series(a, x, acc);
        return std::exp(-x + a * std::log(x)) * upper_gamma_cf(a, x, acc);
    }
    // a < 0: lift into (0, 1] and recur back down through
    // Gamma(a, x) = (Gamma(a + 1, x) - x^a e^-x) / a.
    const int n = static_cast<int>(std::ceil(-a)) + 1;
    double aa = a + n;
    double g = upper_incomplete_gamma(aa, x, acc);
    for (int k = 0; k < n; ++k) {
        aa -= 1.0;
        if (aa == 0.0)
            g = exp_integral_e1(x, acc);
        else
            g = (g - std::exp(-x + aa * std::log(x))) / aa;
    }
    return g;
}

double lower_incomplete_gamma(double a, double x, Accuracy acc) {
    if (a <= 0.0)
        throw math_domain_error("lower_incomplete_gamma: requires a > 0");
    if (x < 0.0)
        throw math_domain_error("lower_incomplete_gamma: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return lower_gamma_series(a, x, acc);
    return gamma_fn(a) -
           std::exp(-x + a * std::log(x)) * upper_gamma_cf(a, x, acc);
}

double erfc_fn(double x) { return std::erfc(x); }
double erf_fn(double x) { return std::erf(x); }

double airy_ai(double x) {
    if (x < 0.0) throw math_domain_error("airy_ai: requires x >= 0");
    if (x <= 4.0) {
        // Ai(x) = c1 f(x) - c2 g(x) with the standard Maclaurin pair.
        const double c1 = 0.355028053887817239260063186004183176;
        const double c2 = 0.258819403792806798405183560189203963;
        const double x3 = x * x * x;
        double f_term = 1.0, f_sum = 1.0;
        double g_term = x, g_sum = x;
        for (int k = 0; k < 60; ++k) {
            f_term *= x3 / ((3 * k + 2) * (3 * k + 3));
            g_term *= x3 / ((3 * k + 3) * (3 * k + 4));
            f_sum += f_term;
            g_sum += g_term;
            if (f_term < 1e-18 * f_sum && g_term < 1e-18 * std::abs(g_sum))
                break;
        }
        return c1 * f_sum - c2 * g_sum;
    }
    // Asymptotic expansion: Ai(x) ~ e^-zeta / (2 sqrt(pi) x^(1/4)) *
    // sum_k (-1)^k u_k zeta^-k, truncated at the smallest term.
    const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    double u = 1.0;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k < 40; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
             (216.0 * k * (2.0 * k - 1.0));
        term = ((k % 2) ? -1.0 : 1.0) * u / std::pow(zeta, k);
        if (std::abs(term) >= prev) break;  // divergent tail reached
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(x, 0.25)) * sum;
}

double kummer_u(double a, double b, double x, Accuracy acc) {
    if (x <= 0.0) throw math_domain_error("kummer_u: requires x > 0");
    if (a <= 0.0) throw math_domain_error("kummer_u: requires a > 0");
    // U(a,b,x) = 1/Gamma(a) Int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt.
    // The substitution t = u^{1/a} removes the endpoint singularity.
    const double expo = b - a - 1.0;
    const double inv_a = 1.0 / a;
    auto integrand = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double t = std::pow(u, inv_a);
        const double e = -x * t + expo * std::log1p(t);
        return (e < -745.0) ? 0.0 : std::exp(e);
    };
    const double scale = std::pow(1.0 / x, a);  // u where x*t ~ 1
    const double cut = std::pow(760.0 / x, a);
    const double tol = std::max(acc.rel_tol * 0.1, 1e-13);
    const double value = integrate_segmented(
        integrand, 0.0, cut,
        {scale, 10.0 * scale, 1e2 * scale, 1e3 * scale, 1e4 * scale}, tol);
    return value / (a * gamma_fn(a));
}

double inverse_upper_gamma(double a, double y, Accuracy acc) {
    if (!(y > 0.0))
        throw math_domain_error("inverse_upper_gamma: requires y > 0");
    if (a > 0.0) {
        const double total = gamma_fn(a);
        if (y > total * (1.0 + 1e-14))
            throw math_domain_error(
                "inverse_upper_gamma: y exceeds Gamma(a), no root");
        if (y >= total) return 0.0;
    }
    auto f = [&](double t) { return upper_incomplete_gamma(a, t, acc) - y; };
    double hi = 1.0;
    while (f(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e300)
            throw convergence_error("inverse_upper_gamma: bracket overflow");
    }
    double lo = std::min(1.0, hi);
    while (f(lo) < 0.0) {
        lo *= 0.5;
        if (lo < 1e-300)
            throw math_domain_error(
                "inverse_upper_gamma: y outside attainable range");
    }
    if (lo == hi) return lo;
    return find_root(f, lo, hi, acc.rel_tol);
}

}  // namespace agint::specfun
