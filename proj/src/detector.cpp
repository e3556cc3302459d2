#include "agint/detector.hpp"

#include <algorithm>
#include <cmath>

#include "agint/errors.hpp"
#include "agint/mcsim.hpp"

namespace agint::detector {
namespace {

// Fixed multipath channel for the H1 source, normalized to unit energy.
constexpr double kChannelTaps[4] = {0.7, 0.5, -0.3, 0.2};

constexpr std::uint64_t kHoldoutStreamBase = 1ULL << 40;
constexpr std::uint64_t kEvalStreamBase = 1ULL << 41;

void check_config(const DetectorConfig& cfg) {
    if (!(cfg.target_pfa > 0.0) || !(cfg.target_pfa < 1.0))
        throw config_error("detector: target_pfa must be in (0, 1)");
    if (cfg.smoothing_factor < 2)
        throw config_error("detector: smoothing_factor must be >= 2");
    if (cfg.n_samples <= static_cast<std::size_t>(cfg.smoothing_factor))
        throw config_error("detector: n_samples must exceed smoothing_factor");
}

std::vector<double> generate_scaled(double snr_db, const DetectorConfig& cfg,
                                    Hypothesis hyp,
                                    const analytic::StableLaw& interference,
                                    double interference_median, rng::Rng& rng) {
    const std::size_t len =
        cfg.n_samples + static_cast<std::size_t>(cfg.smoothing_factor) - 1;
    // Per-sample interference power normalized so its median sits at the
    // configured INR (heavy-tailed laws have no finite mean to pin).
    const double inr = std::pow(10.0, cfg.inr_db / 10.0);
    const double power_scale = inr / interference_median;

    std::vector<double> x(len);
    for (std::size_t n = 0; n < len; ++n) {
        const double noise = rng.normal();
        const double ipow =
            mcsim::stable_sample_one(interference, rng) * power_scale;
        x[n] = noise + std::sqrt(ipow) * rng.normal();
    }
    if (hyp == Hypothesis::h1) {
        double norm2 = 0.0;
        for (double t : kChannelTaps) norm2 += t * t;
        const double amp = std::sqrt(std::pow(10.0, snr_db / 10.0) / norm2);
        std::vector<double> sym(len + 3);
        for (auto& b : sym) b = rng.uniform() < 0.5 ? -1.0 : 1.0;
        for (std::size_t n = 0; n < len; ++n) {
            double s = 0.0;
            for (int m = 0; m < 4; ++m) s += kChannelTaps[m] * sym[n + 3 - m];
            x[n] += amp * s;
        }
    }
    return x;
}

double h0_statistic(const DetectorConfig& cfg,
                    const analytic::StableLaw& interference, double med,
                    std::uint64_t stream) {
    rng::Rng rng(cfg.seed, stream);
    const auto x =
        generate_scaled(0.0, cfg, Hypothesis::h0, interference, med, rng);
    return mme_statistic(x, cfg.smoothing_factor, cfg.n_samples);
}

}  // namespace

std::vector<double> generate_received(double snr_db, const DetectorConfig& cfg,
                                      Hypothesis hyp,
                                      const analytic::StableLaw& interference,
                                      rng::Rng& rng) {
    check_config(cfg);
    return generate_scaled(snr_db, cfg, hyp, interference,
                           analytic::median(interference), rng);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a,
                                          std::size_t dim) {
    // Cyclic Jacobi; adequate for the small covariance sizes used here.
    auto at = [&](std::size_t i, std::size_t j) -> double& {
        return a[i * dim + j];
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                if (at(p, q) == 0.0) continue;
                const double theta =
                    0.5 * std::atan2(2.0 * at(p, q), at(q, q) - at(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (std::size_t k = 0; k < dim; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double mme_statistic_matrix(const std::vector<double>& matrix,
                            std::size_t rows, std::size_t cols) {
    if (cols <= rows)
        throw config_error("mme_statistic: needs more samples than rows");
    std::vector<double> cov(rows * rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i; j < rows; ++j) {
            double s = 0.0;
            for (std::size_t n = 0; n < cols; ++n)
                s += matrix[i * cols + n] * matrix[j * cols + n];
            cov[i * rows + j] = cov[j * rows + i] = s / cols;
        }
    const auto eig = symmetric_eigenvalues(std::move(cov), rows);
    if (!(eig.front() > 1e-12 * std::abs(eig.back())))
        throw convergence_error("mme_statistic: covariance rank-deficient");
    return eig.back() / eig.front();
}

double mme_statistic(const std::vector<double>& series, int window,
                     std::size_t n_samples) {
    const auto w = static_cast<std::size_t>(window);
    if (n_samples <= w)
        throw config_error("mme_statistic: needs n_samples > window");
    if (series.size() < n_samples + w - 1)
        throw config_error("mme_statistic: series too short");
    // Row a of the implicit matrix is series[a .. a+N-1]; entry (a, a+d)
    // of the covariance is a sliding lag-d sum, updated in O(1) per row.
    std::vector<double> cov(w * w, 0.0);
    for (std::size_t d = 0; d < w; ++d) {
        double s = 0.0;
        for (std::size_t m = 0; m < n_samples; ++m) s += series[m] * series[m + d];
        cov[0 * w + d] = s / n_samples;
        for (std::size_t a = 1; a + d < w; ++a) {
            s += series[a - 1 + n_samples] * series[a - 1 + n_samples + d] -
                 series[a - 1] * series[a - 1 + d];
            cov[a * w + (a + d)] = s / n_samples;
        }
    }
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < i; ++j) cov[i * w + j] = cov[j * w + i];
    const auto eig = symmetric_eigenvalues(std::move(cov), w);
    if (!(eig.front() > 1e-12 * std::abs(eig.back())))
        throw convergence_error("mme_statistic: covariance rank-deficient");
    return eig.back() / eig.front();
}

double calibrate_threshold(const DetectorConfig& cfg,
                           const analytic::StableLaw& interference) {
    check_config(cfg);
    if (static_cast<double>(cfg.cal_trials) < 50.0 / cfg.target_pfa)
        throw config_error(
            "calibrate_threshold: too few trials for the target Pfa");
    const double med = analytic::median(interference);
    std::vector<double> stats(cfg.cal_trials);
    const long n = static_cast<long>(cfg.cal_trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i)
        stats[i] = h0_statistic(cfg, interference, med,
                                static_cast<std::uint64_t>(i));
    std::sort(stats.begin(), stats.end());
    const double rank = std::ceil((1.0 - cfg.target_pfa) * cfg.cal_trials);
    const auto idx = std::min<std::size_t>(
        cfg.cal_trials - 1, static_cast<std::size_t>(std::max(rank - 1.0, 0.0)));
    return stats[idx];
}

double adjust_threshold(double threshold, double delta, double reference_delta,
                        double beta) {
    if (!(threshold > 0.0))
        throw math_domain_error("adjust_threshold: threshold must be > 0");
    return threshold * std::exp(beta * (delta - reference_delta));
}

DetectionCurve detection_curve(const DetectorConfig& cfg,
                               const analytic::StableLaw& interference) {
    check_config(cfg);
    DetectionCurve curve;
    curve.threshold = calibrate_threshold(cfg, interference);
    curve.threshold_adjusted =
        cfg.adjust_with_delta
            ? adjust_threshold(curve.threshold, cfg.delta, cfg.reference_delta,
                               cfg.beta)
            : curve.threshold;
    const double thr = curve.threshold_adjusted;
    const double med = analytic::median(interference);

    // Held-out false-alarm estimate at the operating threshold.
    const long holdout = static_cast<long>(cfg.cal_trials) * 2;
    long false_alarms = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : false_alarms)
    for (long i = 0; i < holdout; ++i) {
        const double s = h0_statistic(
            cfg, interference, med,
            kHoldoutStreamBase + static_cast<std::uint64_t>(i));
        if (s > thr) ++false_alarms;
    }
    curve.pfa_achieved = static_cast<double>(false_alarms) / holdout;

    // Common random numbers across SNR points: evaluation trial i reuses
    // stream i at every SNR, which keeps the estimated curve monotone up
    // to per-trial threshold crossings.
    curve.snr_db = cfg.snr_grid_db;
    curve.pd.resize(cfg.snr_grid_db.size());
    for (std::size_t j = 0; j < cfg.snr_grid_db.size(); ++j) {
        const double snr = cfg.snr_grid_db[j];
        long detections = 0;
        const long trials = static_cast<long>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : detections)
        for (long i = 0; i < trials; ++i) {
            rng::Rng rng(cfg.seed,
                         kEvalStreamBase + static_cast<std::uint64_t>(i));
            const auto x = generate_scaled(snr, cfg, Hypothesis::h1,
                                           interference, med, rng);
            if (mme_statistic(x, cfg.smoothing_factor, cfg.n_samples) > thr)
                ++detections;
        }
        curve.pd[j] = static_cast<double>(detections) / cfg.trials;
    }
    return curve;
}

}  // namespace agint::detector
