#pragma once

#include "agint/geometry.hpp"
#include "agint/ltinv.hpp"

namespace agint::analytic {

enum class FadingKind { rayleigh, none };

struct FadingSpec {
    FadingKind kind = FadingKind::rayleigh;
    double mean_power = 1.0;  // E(h)
};

// Binds every ingredient of the interference characterization: path-loss
// exponent alpha (stable index eta = 2/alpha), node density, region and
// fading model.
struct InterferenceModel {
    double alpha = 4.0;
    double lambda = 0.1;  // nodes per unit area
    geom::RegionSpec region;
    FadingSpec fading;

    double eta() const { return 2.0 / alpha; }
};

// One-sided stable law with Laplace transform exp(-K s^eta).
struct StableLaw {
    double k;    // scale constant, > 0
    double eta;  // index in (0, 1]
};

// eta-th fractional moment of the fading power gain.
double fading_fractional_moment(const FadingSpec& fading, double eta);

// Stable scale constant of the admissible-region interference. The
// angular factor enters as the admissible fraction theta1/pi of the full
// circle so that the theta1 = pi limit reproduces the infinite-network
// transform. Throws config_error on an empty region or when the
// truncation rule fails.
StableLaw compute_k(const InterferenceModel& model);

// The constant as printed in the source derivation (angular factor
// 2*theta1 on top of pi*lambda); kept for discrepancy reporting.
double compute_k_paper_literal(const InterferenceModel& model);

double laplace_transform(const StableLaw& law, double s);

// Infinite-network transform exp(-pi lambda s^eta pi eta / sin(pi eta)),
// valid for 0 < eta < 1.
double laplace_transform_infinite(const InterferenceModel& model, double s);

// Density of the stable law. Closed forms for eta in {1/3, 1/2, 2/3};
// other indices are routed through numerical inversion. eta = 1 is a
// point mass at K and throws point_mass_error.
double pdf(const StableLaw& law, double r,
           const ltinv::InversionConfig& cfg = {});

// The density branches exactly as printed in the source derivation
// (alpha in {3, 4, 6}); kept for discrepancy reporting.
double pdf_paper_literal(double alpha, double k, double r);

double cdf(const StableLaw& law, double r,
           const ltinv::InversionConfig& cfg = {});

// Mean restricted to [0, r_max] by adaptive quadrature (the reference
// path for every index; the full mean diverges for eta < 1).
double truncated_mean(const StableLaw& law, double r_max,
                      const ltinv::InversionConfig& cfg = {});

// Closed-form truncated means as printed in the source derivation.
// Throws math_domain_error for alpha values without a printed form and
// for the alpha = 3 form when its inverse-gamma argument has no root.
double truncated_mean_paper(double alpha, double k, double r_max);

// One-term exponential approximation of Airy Ai for positive arguments.
double airy_asymptotic(double x);

// Distributional uncertainty Int_0^inf f ln f dr (the negative of the
// differential entropy). Requires eta < 1.
double uncertainty(const StableLaw& law, const ltinv::InversionConfig& cfg = {});

// Median of the law (root of cdf = 1/2).
double median(const StableLaw& law, const ltinv::InversionConfig& cfg = {});

// Leading tail coefficient: pdf(r) ~ tail_coefficient * r^(-1-eta).
double tail_coefficient(const StableLaw& law);

}  // namespace agint::analytic
