#include "agint/validate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agint/analytic.hpp"
#include "agint/detector.hpp"
#include "agint/errors.hpp"
#include "agint/geometry.hpp"
#include "agint/io.hpp"
#include "agint/ltinv.hpp"
#include "agint/mcsim.hpp"
#include "agint/quadrature.hpp"
#include "agint/specfun.hpp"

namespace agint::validate {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo * std::exp(i * step);
    return out;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Grid lower edge, in units of K^(1/eta): the eta = 2/3 branch's deep left
// tail sits below the inversion noise floor, so its grid starts higher.
double grid_lo(double eta) { return eta > 0.6 ? 0.15 : 0.05; }

// Total probability mass: quadrature body plus the first-order power-law
// tail C r^(-1-eta) integrated analytically beyond r_tail.
double total_mass(const analytic::StableLaw& law) {
    const double s = std::pow(law.k, 1.0 / law.eta);
    const double r_tail = s * std::pow(10.0, std::max(8.0, 4.0 / law.eta));
    auto f = [&](double x) { return x > 0.0 ? analytic::pdf(law, x) : 0.0; };
    double acc = integrate_segmented(f, 0.0, 10.0 * s,
                                     {s / 30.0, s / 6.0, s, 3.0 * s}, 1e-10,
                                     1e-14);
    double lo = 10.0 * s;
    while (lo < r_tail) {
        const double hi = std::min(lo * 10.0, r_tail);
        acc += integrate(f, lo, hi, 1e-10, 1e-14);
        lo = hi;
    }
    return acc + analytic::tail_coefficient(law) * std::pow(r_tail, -law.eta) /
                     law.eta;
}

// Closed-form differential entropy of the Levy law with c = K^2/2.
double levy_entropy(double k) {
    const double c = 0.5 * k * k;
    return 0.5 * (1.0 + 3.0 * kEulerGamma + std::log(16.0 * kPi * c * c));
}

analytic::InterferenceModel full_disk_model() {
    // r_max = 3x the truncation-rule minimum (eps^(-1/(alpha-2)) = 10 at
    // eps = 0.01). At the bare minimum the finite-disk law still deviates
    // from the stable approximation by ~0.023 in KS distance; the extra
    // radius brings the approximation itself well inside the MC bound.
    analytic::InterferenceModel model;
    model.alpha = 4.0;
    model.lambda = 0.05;
    model.region = {30.0, 0.0, 0.0, 0.01};
    model.fading = {analytic::FadingKind::rayleigh, 1.0};
    return model;
}

detector::DetectorConfig small_detector_config(std::uint64_t seed) {
    detector::DetectorConfig cfg;
    cfg.n_samples = 400;
    cfg.smoothing_factor = 4;
    cfg.cal_trials = 600;
    cfg.trials = 100;
    cfg.snr_grid_db = {-20.0, -5.0};
    cfg.adjust_with_delta = false;
    cfg.seed = seed;
    return cfg;
}

class Checker {
  public:
    explicit Checker(ValidationReport& report) : report_(report) {}

    void hard(const std::string& name, double value, double bound,
              std::string note = "") {
        report_.checks.push_back(
            {name, true, value <= bound, value, bound, std::move(note)});
    }

    void soft(const std::string& name, double value, std::string note) {
        report_.checks.push_back(
            {name, false, true, value, 0.0, std::move(note)});
    }

    void failure(const std::string& name, double bound,
                 const std::string& why) {
        report_.checks.push_back({name, true, false,
                                  std::numeric_limits<double>::quiet_NaN(),
                                  bound, why});
    }

  private:
    ValidationReport& report_;
};

void check_pdf_inversion(Checker& ck) {
    const double etas[] = {1.0 / 3.0, 0.5, 2.0 / 3.0};
    const char* names[] = {"pdf_vs_inversion_eta_1_3", "pdf_vs_inversion_eta_1_2",
                           "pdf_vs_inversion_eta_2_3"};
    for (int e = 0; e < 3; ++e) {
        const double eta = etas[e];
        double worst = 0.0;
        for (double k : {0.25, 0.5598, 1.0}) {
            const analytic::StableLaw law{k, eta};
            const double s = std::pow(k, 1.0 / eta);
            for (double r : logspace(grid_lo(eta) * s, 100.0 * s, 50)) {
                const double closed = analytic::pdf(law, r);
                if (closed <= 1e-12) continue;
                const double inv = ltinv::invert_stable(k, eta, r);
                worst = std::max(worst, rel_err(closed, inv));
            }
        }
        ck.hard(names[e], worst, 1e-6,
                "max rel err, closed form vs dual-method inversion, K in "
                "{0.25, 0.5598, 1}");
    }
}

void check_normalization(Checker& ck, bool negate_k) {
    double worst = 0.0;
    try {
        for (double eta : {1.0 / 3.0, 0.5, 2.0 / 3.0})
            for (double k : {0.25, 0.5598, 1.0, 2.0}) {
                const analytic::StableLaw law{negate_k ? -k : k, eta};
                worst = std::max(worst, std::abs(total_mass(law) - 1.0));
            }
        ck.hard("normalization", worst, 1e-6,
                "max |integral of pdf - 1| over eta x K grid");
    } catch (const std::exception& ex) {
        ck.failure("normalization", 1e-6,
                   std::string("pdf evaluation failed: ") + ex.what());
    }
}

void check_laplace_consistency(Checker& ck) {
    double worst = 0.0;
    for (double eta : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
        const analytic::StableLaw law{1.0, eta};
        const double scale = 1.0;
        for (double s : {0.1, 1.0, 10.0}) {
            auto f = [&](double r) {
                return r > 0.0 ? std::exp(-s * r) * analytic::pdf(law, r) : 0.0;
            };
            const double hi = std::max(30.0 * scale, 200.0 / s);
            const double got = integrate_segmented(
                f, 0.0, hi, {scale / 30.0, scale / 6.0, scale, 10.0 * scale},
                1e-10, 1e-14);
            worst = std::max(
                worst, std::abs(got - analytic::laplace_transform(law, s)));
        }
    }
    ck.hard("laplace_consistency", worst, 1e-6,
            "max |quadrature LT of pdf - exp(-K s^eta)| at s in {0.1, 1, 10}");
}

void check_monte_carlo(Checker& ck, const ValidationOptions& opts) {
    mcsim::CampaignParams params;
    params.model = full_disk_model();
    params.n_trials = opts.quick ? 20000 : 100000;
    params.seed = opts.seed;
    const auto result = mcsim::run_campaign(params);
    const auto law = analytic::compute_k(params.model);
    const double ks = mcsim::ks_distance(
        result.samples, [&](double r) { return analytic::cdf(law, r); });
    ck.hard("mc_vs_analytic_ks", ks, 0.02,
            "KS distance, full-disk Rayleigh campaign (alpha=4, lambda=0.05, "
            "r_max=30) vs analytic cdf, " +
                std::to_string(params.n_trials) + " trials");
}

void check_cms_sampler(Checker& ck, const ValidationOptions& opts) {
    const analytic::StableLaw law{1.0, 0.5};
    rng::Rng rng(opts.seed, 1234567);
    auto samples = mcsim::stable_sample(law, 100000, rng);
    const double ks = mcsim::ks_distance(
        std::move(samples), [&](double r) { return analytic::cdf(law, r); });
    ck.hard("cms_vs_levy_ks", ks, 0.01,
            "KS distance, direct stable sampler (eta=1/2, K=1, n=1e5) vs "
            "Levy closed-form cdf");
}

void check_entropy(Checker& ck) {
    double worst = 0.0;
    for (double k : {0.5, 1.0, 2.0}) {
        const double got = -analytic::uncertainty({k, 0.5});
        worst = std::max(worst, rel_err(got, levy_entropy(k)));
    }
    ck.hard("entropy_vs_levy_closed_form", worst, 1e-6,
            "max rel err of -uncertainty vs Levy differential entropy, K in "
            "{0.5, 1, 2}");
}

void check_k_quadrature(Checker& ck) {
    double worst = 0.0;
    for (double alpha : {3.0, 4.0, 6.0})
        for (double rp : {0.1, 0.5, 1.0})
            for (double rm : {25.0, 40.0, 60.0}) {
                analytic::InterferenceModel model;
                model.alpha = alpha;
                model.lambda = 0.1;
                model.region = {rm, rp, rm, 0.05};
                const double eta = model.eta();
                const double k = analytic::compute_k(model).k;
                const double radial = integrate(
                    [eta](double r) {
                        return std::pow(r, -eta) * std::exp(-r);
                    },
                    rp, rm, 1e-13);
                const double oracle =
                    model.lambda * geom::lune(model.region).theta1 *
                    analytic::fading_fractional_moment(model.fading, eta) *
                    radial;
                worst = std::max(worst, rel_err(k, oracle));
            }
    ck.hard("compute_k_vs_quadrature", worst, 1e-10,
            "max rel err, incomplete-gamma closed form vs adaptive quadrature "
            "over (alpha, r_p, r_max) grid");
}

void check_airy(Checker& ck) {
    double worst = 0.0;
    for (double x = 8.0; x <= 40.0; x += 0.25)
        worst = std::max(worst, rel_err(analytic::airy_asymptotic(x),
                                        specfun::airy_ai(x)));
    ck.hard("airy_asymptotic_tail", worst, 0.01,
            "max rel err of the one-term Airy asymptotic on x in [8, 40]");

    double crossover = 0.5;
    for (double x = 8.0; x > 0.5; x -= 0.01) {
        if (rel_err(analytic::airy_asymptotic(x), specfun::airy_ai(x)) >
            0.05) {
            crossover = x;
            break;
        }
    }
    ck.soft("airy_asymptotic_crossover", crossover,
            "largest x at which the asymptotic's relative error exceeds 5%");
}

void check_infinite_limit(Checker& ck) {
    analytic::InterferenceModel model;
    model.alpha = 4.0;
    model.lambda = 0.01;
    model.region = {50.0, 0.0, 0.0, 0.01};
    const auto law = analytic::compute_k(model);
    const double fin = analytic::laplace_transform(law, 1.0);
    const double inf = analytic::laplace_transform_infinite(model, 1.0);
    ck.hard("infinite_network_limit", rel_err(fin, inf), 0.01,
            "finite-region LT (r_max=50, r_p=0) vs infinite-network LT at "
            "s=1, lambda=0.01");
}

void check_detector(Checker& ck, const ValidationOptions& opts) {
    if (opts.quick) {
        ck.soft("detector_curve", 0.0, "skipped in quick mode");
        return;
    }
    detector::DetectorConfig cfg;
    cfg.adjust_with_delta = false;
    cfg.seed = opts.seed;
    const analytic::StableLaw law{1.0, 0.5};
    const auto curve = detector::detection_curve(cfg, law);

    ck.hard("detector_pfa", std::abs(curve.pfa_achieved - cfg.target_pfa),
            0.02,
            "|achieved - target| false-alarm rate on " +
                std::to_string(2 * cfg.cal_trials) + " held-out H0 trials");
    double max_drop = 0.0, max_floor = 0.0;
    for (std::size_t j = 0; j < curve.pd.size(); ++j) {
        if (j + 1 < curve.pd.size())
            max_drop = std::max(max_drop, curve.pd[j] - curve.pd[j + 1]);
        max_floor = std::max(max_floor, curve.pfa_achieved - curve.pd[j]);
    }
    ck.hard("detector_pd_monotone", max_drop, 0.02,
            "max decrease of Pd along the SNR grid");
    ck.hard("detector_pd_above_pfa", max_floor, 0.02,
            "max shortfall of Pd below the achieved Pfa");

    const double adjusted = detector::adjust_threshold(
        curve.threshold, 2.62, cfg.reference_delta, cfg.beta);
    ck.soft("detector_delta_adjustment", adjusted / curve.threshold,
            "threshold ratio at delta=2.62: heavier-tailed interference "
            "raises the threshold, trading Pd for Pfa margin (direction "
            "reported, not asserted)");
}

void check_determinism(Checker& ck, const ValidationOptions& opts) {
    mcsim::CampaignParams params;
    params.model = full_disk_model();
    params.n_trials = 2000;
    params.seed = opts.seed;
    const auto serial = mcsim::run_campaign_serial(params);
    const auto parallel = mcsim::run_campaign(params);
    const auto repeat = mcsim::run_campaign(params);
    const bool same = io::campaign_csv(serial, {}) ==
                          io::campaign_csv(parallel, {}) &&
                      io::campaign_csv(parallel, {}) ==
                          io::campaign_csv(repeat, {});
    ck.hard("determinism_campaign", same ? 0.0 : 1.0, 0.0,
            "serial vs OpenMP vs repeated campaign, byte-compared CSV");

    const auto cfg = small_detector_config(opts.seed);
    const analytic::StableLaw law{1.0, 0.5};
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const auto one = detector::detection_curve(cfg, law);
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
    const auto many = detector::detection_curve(cfg, law);
    ck.hard("determinism_detector",
            io::curve_csv(one, {}) == io::curve_csv(many, {}) ? 0.0 : 1.0, 0.0,
            "detection curve across worker counts, byte-compared CSV");
}

void report_operating_points(Checker& ck) {
    // K at which the uncertainty functional hits the quoted operating
    // point 2.62 (eta = 1/2).
    const double k262 = find_root(
        [](double k) { return analytic::uncertainty({k, 0.5}) - 2.62; }, 0.005,
        1.0, 1e-10);
    ck.soft("uncertainty_2_62_scale", k262,
            "K solving uncertainty(K, eta=1/2) = 2.62");

    // lambda * theta1 product that would reproduce the quoted K = 0.5598
    // at alpha = 3, r_max = 3.4 (density and geometry are otherwise free).
    const double eta = 2.0 / 3.0;
    const double radial = specfun::lower_incomplete_gamma(1.0 - eta, 3.4);
    const double eh = specfun::gamma_fn(1.0 + eta);
    ck.soft("k_0_5598_lambda_theta1", 0.5598 / (eh * radial),
            "lambda*theta1 product implying K=0.5598 at alpha=3, r_max=3.4 "
            "(unstated in the source)");
}

void report_paper_literal(Checker& ck) {
    {
        const auto model = full_disk_model();
        ck.soft("paper_literal_k_factor",
                analytic::compute_k_paper_literal(model) /
                    analytic::compute_k(model).k,
                "printed K prefactor (pi*lambda*2*theta1) over canonical "
                "(lambda*theta1): constant 2*pi, inconsistent with the "
                "printed infinite-network limit and with Monte Carlo");
    }
    const double alphas[] = {3.0, 4.0, 6.0};
    const char* names[] = {"paper_literal_pdf_alpha_3",
                           "paper_literal_pdf_alpha_4",
                           "paper_literal_pdf_alpha_6"};
    for (int i = 0; i < 3; ++i) {
        const double alpha = alphas[i];
        const double k = 0.5598;
        const analytic::StableLaw law{k, 2.0 / alpha};
        const double s = std::pow(k, alpha / 2.0);
        double worst = 0.0;
        for (double r : logspace(0.3 * s, 30.0 * s, 20))
            worst = std::max(worst,
                             rel_err(analytic::pdf_paper_literal(alpha, k, r),
                                     analytic::pdf(law, r)));
        ck.soft(names[i], worst,
                "max rel deviation of the printed density branch from the "
                "inversion-validated canonical form, K=0.5598");
    }

    ck.soft("paper_literal_mean_alpha_2",
            analytic::truncated_mean({1.0, 1.0}, 3.4),
            "printed form delta(K)*r_max^2/2 carries a Dirac prefactor and "
            "has no finite value; canonical sifting value K*1{K<=r_max} "
            "reported for K=1, r_max=3.4");

    double worst4 = 0.0, worst6 = 0.0;
    for (double k : {0.25, 0.5598, 1.0})
        for (double rm : {1.0, 3.4, 10.0}) {
            worst4 = std::max(
                worst4, std::abs(analytic::truncated_mean_paper(4.0, k, rm) -
                                 analytic::truncated_mean({k, 0.5}, rm)));
            worst6 = std::max(
                worst6,
                rel_err(analytic::truncated_mean_paper(6.0, k, rm),
                        analytic::truncated_mean({k, 1.0 / 3.0}, rm)));
        }
    ck.soft("paper_literal_mean_alpha_4", worst4,
            "max abs deviation, printed erfc form vs quadrature over K x "
            "r_max grid");
    ck.soft("paper_literal_mean_alpha_6", worst6,
            std::string("max rel deviation, printed Airy-asymptotic form vs "
                        "quadrature") +
                (worst6 > 0.10 ? "; exceeds the 10% flag threshold" : ""));

    double worst3 = 0.0;
    std::string note3 =
        "printed inverse-incomplete-gamma form vs quadrature at r_max=3.4";
    for (double k : {0.25, 0.5598, 1.0}) {
        try {
            worst3 = std::max(
                worst3, rel_err(analytic::truncated_mean_paper(3.0, k, 3.4),
                                analytic::truncated_mean({k, 2.0 / 3.0}, 3.4)));
        } catch (const math_domain_error& ex) {
            note3 += std::string("; K=") + io::fmt(k) + ": " + ex.what();
        }
    }
    ck.soft("paper_literal_mean_alpha_3", worst3, note3);
}

}  // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return !c.hard || c.passed; });
}

ValidationReport run_validation(const ValidationOptions& opts) {
    ValidationReport report;
    report.seed = opts.seed;
    Checker ck(report);

    check_pdf_inversion(ck);
    check_normalization(ck, opts.negate_k_fault);
    check_laplace_consistency(ck);
    check_monte_carlo(ck, opts);
    check_cms_sampler(ck, opts);
    check_entropy(ck);
    check_k_quadrature(ck);
    check_airy(ck);
    check_infinite_limit(ck);
    check_detector(ck, opts);
    check_determinism(ck, opts);
    report_operating_points(ck);
    if (opts.paper_literal) report_paper_literal(ck);

    return report;
}

}  // namespace agint::validate
