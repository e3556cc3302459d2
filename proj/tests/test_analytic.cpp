#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "agint/analytic.hpp"
#include "agint/errors.hpp"
#include "agint/ltinv.hpp"
#include "agint/specfun.hpp"
#include "oracles.hpp"

using namespace agint;
using oracle::rel_err;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

analytic::InterferenceModel make_model(double alpha, double lambda,
                                       geom::RegionSpec region,
                                       analytic::FadingKind kind =
                                           analytic::FadingKind::rayleigh) {
    analytic::InterferenceModel m;
    m.alpha = alpha;
    m.lambda = lambda;
    m.region = region;
    m.fading = {kind, 1.0};
    return m;
}

double levy_entropy(double k) {
    const double c = 0.5 * k * k;
    return 0.5 * (1.0 + 3.0 * kEulerGamma + std::log(16.0 * kPi * c * c));
}
}  // namespace

TEST_CASE("compute_k against a quadrature oracle") {
    const auto model =
        make_model(4.0, 0.1, {10.5, 0.5, 0.0, 0.01});  // concentric annulus
    const auto law = analytic::compute_k(model);
    CHECK(law.eta == doctest::Approx(0.5));
    const double radial = oracle::integrate(
        [](double r) { return std::exp(-r) / std::sqrt(r); }, 0.5, 10.5,
        1e-14);
    const double oracle_k =
        0.1 * kPi * specfun::gamma_fn(1.5) * radial;  // theta1 = pi
    CHECK(rel_err(law.k, oracle_k) < 1e-10);
}

TEST_CASE("compute_k boundary and monotonicity") {
    CHECK_THROWS_AS(
        analytic::compute_k(make_model(4.0, 0.1, {10.0, 10.0, 0.0, 0.01})),
        config_error);  // r_max = r_p: zero-measure region
    CHECK_THROWS_AS(
        analytic::compute_k(make_model(4.0, 0.1, {5.0, 0.0, 0.0, 0.01})),
        config_error);  // truncation rule: 5^-2 = 0.04 >= 0.01

    double prev = 0.0;
    for (double lambda : {0.01, 0.05, 0.1}) {
        const double k =
            analytic::compute_k(make_model(4.0, lambda, {10.5, 0.0, 0.0, 0.01}))
                .k;
        CHECK(k > prev);
        prev = k;
    }
    prev = 1e9;
    for (double rp : {0.5, 1.0, 2.0}) {
        const double k =
            analytic::compute_k(make_model(4.0, 0.1, {10.5, rp, 0.0, 0.01})).k;
        CHECK(k < prev);
        prev = k;
    }
    // Shrinking theta1 (protection bite moving inward) shrinks K.
    const double k_small_bite =
        analytic::compute_k(make_model(4.0, 0.1, {10.5, 1.0, 10.5, 0.01})).k;
    const double k_big_bite =
        analytic::compute_k(make_model(4.0, 0.1, {10.5, 4.0, 10.5, 0.01})).k;
    CHECK(k_big_bite < k_small_bite);
}

TEST_CASE("compute_k at alpha = 2 uses the exponential-integral limit") {
    auto model = make_model(2.0, 0.1, {10.0, 0.5, 0.0, 0.01});
    const auto law = analytic::compute_k(model);
    CHECK(law.eta == doctest::Approx(1.0));
    const double radial = oracle::integrate(
        [](double r) { return std::exp(-r) / r; }, 0.5, 10.0, 1e-14);
    CHECK(rel_err(law.k, 0.1 * kPi * radial) < 1e-10);

    model.region.r_p = 0.0;
    CHECK_THROWS_AS(analytic::compute_k(model), config_error);
}

TEST_CASE("paper-literal K carries the printed 2*pi prefactor") {
    const auto model = make_model(4.0, 0.05, {10.5, 0.0, 0.0, 0.01});
    CHECK(rel_err(analytic::compute_k_paper_literal(model),
                  2.0 * kPi * analytic::compute_k(model).k) < 1e-14);
}

TEST_CASE("laplace transforms") {
    const analytic::StableLaw law{0.7, 0.5};
    CHECK(analytic::laplace_transform(law, 0.0) == 1.0);
    CHECK(analytic::laplace_transform(law, 4.0) ==
          doctest::Approx(std::exp(-1.4)));

    const auto model = make_model(4.0, 0.3, {10.5, 0.0, 0.0, 0.01});
    // eta = 1/2: exponent is -pi^2 lambda sqrt(s) / 2.
    CHECK(analytic::laplace_transform_infinite(model, 4.0) ==
          doctest::Approx(std::exp(-kPi * kPi * 0.3)));
    double prev = 1.1;
    for (double s : {0.1, 1.0, 10.0}) {
        const double v = analytic::laplace_transform_infinite(model, s);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(analytic::laplace_transform_infinite(
                        make_model(2.0, 0.1, {10.0, 0.5, 0.0, 0.01}), 1.0),
                    math_domain_error);

    // Finite-region transform approaches the infinite-network one for a
    // large disk and sparse nodes.
    const auto big = make_model(4.0, 0.01, {50.0, 0.0, 0.0, 0.01});
    const auto big_law = analytic::compute_k(big);
    CHECK(rel_err(analytic::laplace_transform(big_law, 1.0),
                  analytic::laplace_transform_infinite(big, 1.0)) < 0.01);
}

TEST_CASE("closed-form densities") {
    // eta = 1/2, K = 2, r = 1: (2 / (2 sqrt(pi))) e^-1.
    CHECK(rel_err(analytic::pdf({2.0, 0.5}, 1.0),
                  std::exp(-1.0) / std::sqrt(kPi)) < 1e-14);
    CHECK(rel_err(analytic::pdf({1.0, 0.5}, 1.0),
                  std::exp(-0.25) / (2.0 * std::sqrt(kPi))) < 1e-14);
    CHECK_THROWS_AS(analytic::pdf({1.0, 1.0}, 1.0), point_mass_error);
    CHECK_THROWS_AS(analytic::pdf({1.0, 0.5}, 0.0), math_domain_error);
    CHECK_THROWS_AS(analytic::pdf({-1.0, 0.5}, 1.0), math_domain_error);
}

TEST_CASE("stability scaling law") {
    const double a = 2.0;
    for (double eta : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        const analytic::StableLaw base{0.8, eta};
        const analytic::StableLaw scaled{0.8 * std::pow(a, eta), eta};
        for (double r = 0.2; r < 30.0; r *= 1.7)
            CHECK(rel_err(analytic::pdf(scaled, r),
                          analytic::pdf(base, r / a) / a) < 1e-10);
    }
}

TEST_CASE("cdf") {
    const analytic::StableLaw law{1.3, 0.5};
    CHECK(analytic::cdf(law, 0.0) == 0.0);
    CHECK(rel_err(analytic::cdf(law, 1.3 * 1.3 / 4.0),
                  specfun::erfc_fn(1.0)) < 1e-13);
    CHECK(analytic::cdf({1.0, 1.0}, 0.5) == 0.0);  // point mass at K
    CHECK(analytic::cdf({1.0, 1.0}, 1.0) == 1.0);

    double prev = -1.0;
    const analytic::StableLaw airy_law{1.0, 1.0 / 3.0};
    for (double r = 0.1; r < 1e4; r *= 3.0) {
        const double v = analytic::cdf(airy_law, r);
        CHECK(v >= prev);
        CHECK(v <= 1.0 + 1e-9);
        prev = v;
    }
    CHECK(std::abs(analytic::cdf(airy_law, 1e18) - 1.0) < 1e-6);
}

TEST_CASE("truncated mean") {
    // Point-mass sifting.
    CHECK(analytic::truncated_mean({1.0, 1.0}, 3.4) == 1.0);
    CHECK(analytic::truncated_mean({5.0, 1.0}, 3.4) == 0.0);

    // Quadrature oracle for the Levy law.
    const double got = analytic::truncated_mean({1.0, 0.5}, 3.4);
    const double want = oracle::integrate(
        [](double r) {
            return r > 1e-14 ? r / (2.0 * std::sqrt(kPi)) *
                                   std::pow(r, -1.5) * std::exp(-0.25 / r)
                             : 0.0;
        },
        0.0, 3.4, 1e-12);
    CHECK(rel_err(got, want) < 1e-8);

    // Heavy tail: grows without bound, no plateau.
    const double m1 = analytic::truncated_mean({1.0, 0.5}, 10.0);
    const double m2 = analytic::truncated_mean({1.0, 0.5}, 100.0);
    const double m3 = analytic::truncated_mean({1.0, 0.5}, 1000.0);
    CHECK(m2 > m1);
    CHECK(m3 > m2);
    CHECK(m3 - m2 > m2 - m1);
}

TEST_CASE("printed truncated-mean forms") {
    // alpha = 4 printed form evaluates; deviation from quadrature is
    // documentation, not an assertion.
    CHECK(analytic::truncated_mean_paper(4.0, 1.0, 3.4) ==
          doctest::Approx(specfun::erfc_fn(1.0 / (2.0 * std::sqrt(3.4)))));
    // alpha = 2 printed form carries a Dirac prefactor.
    CHECK_THROWS_AS(analytic::truncated_mean_paper(2.0, 1.0, 3.4),
                    math_domain_error);
    // alpha = 3 printed form has no root at the printed operating radius.
    CHECK_THROWS_AS(analytic::truncated_mean_paper(3.0, 1.0, 3.4),
                    math_domain_error);
    CHECK_THROWS_AS(analytic::truncated_mean_paper(5.0, 1.0, 3.4),
                    math_domain_error);
}

TEST_CASE("airy asymptotic") {
    CHECK(rel_err(analytic::airy_asymptotic(10.0), specfun::airy_ai(10.0)) <
          0.01);
    const double err1 =
        rel_err(analytic::airy_asymptotic(1.0), specfun::airy_ai(1.0));
    CHECK(err1 > 0.02);
    CHECK(err1 < 0.30);
    double prev = 1.0;
    for (double x = 0.5; x < 20.0; x += 0.5) {
        const double v = analytic::airy_asymptotic(x);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("uncertainty functional") {
    for (double k : {0.5, 1.0, 2.0})
        CHECK(rel_err(-analytic::uncertainty({k, 0.5}), levy_entropy(k)) <
              1e-6);

    // Rescaling the variable by a shifts the entropy by ln a.
    const double a = 2.0;
    const double h1 = -analytic::uncertainty({1.0, 0.5});
    const double h2 = -analytic::uncertainty({std::sqrt(a), 0.5});
    CHECK(std::abs(h2 - (h1 + std::log(a))) < 1e-6);

    CHECK_THROWS_AS(analytic::uncertainty({1.0, 1.0}), math_domain_error);
}

TEST_CASE("median and tail") {
    for (double eta : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        const analytic::StableLaw law{0.8, eta};
        const double med = analytic::median(law);
        CHECK(std::abs(analytic::cdf(law, med) - 0.5) < 1e-9);
    }
    // pdf(r) ~ tail_coefficient * r^(-1-eta) far out.
    const analytic::StableLaw law{1.0, 1.0 / 3.0};
    const double r = 1e8;
    CHECK(rel_err(analytic::pdf(law, r) * std::pow(r, 1.0 + law.eta),
                  analytic::tail_coefficient(law)) < 1e-2);
}

TEST_CASE("laplace consistency of the closed forms") {
    for (double eta : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        const analytic::StableLaw law{1.0, eta};
        for (double s : {0.1, 1.0, 10.0}) {
            auto f = [&](double r) {
                return r > 1e-13 ? std::exp(-s * r) * analytic::pdf(law, r)
                                 : 0.0;
            };
            // Piecewise so the adaptive oracle resolves the density peak
            // near the natural scale and the slow tail separately.
            double got = 0.0;
            double lo = 0.0;
            const double top = std::max(60.0, 400.0 / s);
            for (double hi : {0.03, 0.3, 3.0, 30.0, top}) {
                if (hi <= lo) continue;
                got += oracle::integrate(f, lo, hi, 2e-11);
                lo = hi;
            }
            CHECK(std::abs(got - analytic::laplace_transform(law, s)) < 1e-6);
        }
    }
}
