#include "agint/mcsim.hpp"

#include <algorithm>
#include <cmath>

#include "agint/errors.hpp"

namespace agint::mcsim {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kRadialTableSize = 4097;

// Half-width of the blocked arc at radius r (protection disk at distance
// d with radius rp).
double blocked_half_angle(double r, double d, double rp) {
    if (rp <= 0.0 || r <= 0.0) return 0.0;
    if (d == 0.0) return r < rp ? kPi : 0.0;
    const double c = (r * r + d * d - rp * rp) / (2.0 * r * d);
    if (c >= 1.0) return 0.0;
    if (c <= -1.0) return kPi;
    return std::acos(c);
}

}  // namespace

LuneSampler::LuneSampler(const geom::RegionSpec& region)
    : region_(region), lune_(geom::lune(region)) {
    if (lune_.area <= 0.0)
        throw config_error("LuneSampler: admissible region is empty");
    const double disk = kPi * region.r_max * region.r_max;
    use_rejection_ = lune_.area / disk >= 0.01;
    if (use_rejection_) return;
    // Radial mass density ~ r * (2 pi - 2 phi(r)); tabulated cumulative
    // for inverse-CDF sampling of thin regions.
    r_grid_.resize(kRadialTableSize);
    cum_.resize(kRadialTableSize);
    const double dr = region.r_max / (kRadialTableSize - 1);
    auto w = [&](double r) {
        return r * 2.0 *
               (kPi - blocked_half_angle(r, region.r_dec, region.r_p));
    };
    cum_[0] = 0.0;
    r_grid_[0] = 0.0;
    for (int i = 1; i < kRadialTableSize; ++i) {
        r_grid_[i] = i * dr;
        cum_[i] = cum_[i - 1] +
                  0.5 * dr * (w(r_grid_[i - 1]) + w(r_grid_[i]));
    }
}

geom::Point2D LuneSampler::sample(rng::Rng& rng) const {
    if (use_rejection_) {
        for (int tries = 0; tries < 100000; ++tries) {
            const double r = region_.r_max * std::sqrt(rng.uniform());
            const double th = 2.0 * kPi * rng.uniform();
            geom::Point2D p{r * std::cos(th), r * std::sin(th)};
            if (geom::contains(p, region_)) return p;
        }
        throw convergence_error("LuneSampler: rejection budget exhausted");
    }
    const double target = rng.uniform() * cum_.back();
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    const std::size_t hi = std::min<std::size_t>(it - cum_.begin(),
                                                 cum_.size() - 1);
    const std::size_t lo = hi - 1;
    const double frac = (target - cum_[lo]) / (cum_[hi] - cum_[lo]);
    const double r = r_grid_[lo] + frac * (r_grid_[hi] - r_grid_[lo]);
    const double phi = blocked_half_angle(r, region_.r_dec, region_.r_p);
    // Uniform over the admissible arc [phi, 2 pi - phi].
    const double th = phi + rng.uniform() * (2.0 * kPi - 2.0 * phi);
    return {r * std::cos(th), r * std::sin(th)};
}

std::uint64_t poisson_count(rng::Rng& rng, double mean) {
    if (mean < 0.0) throw math_domain_error("poisson_count: mean < 0");
    std::uint64_t n = 0;
    while (mean > 400.0) {  // additivity keeps exp(-mean) in range
        n += poisson_count(rng, 400.0);
        mean -= 400.0;
    }
    if (mean == 0.0) return n;
    const double limit = std::exp(-mean);
    double p = 1.0;
    std::uint64_t k = 0;
    do {
        ++k;
        p *= rng.uniform();
    } while (p > limit);
    return n + k - 1;
}

std::vector<geom::Point2D> sample_ppp(const LuneSampler& sampler,
                                      const analytic::InterferenceModel& model,
                                      rng::Rng& rng) {
    const double mean = model.lambda * sampler.area();
    const std::uint64_t n = poisson_count(rng, mean);
    std::vector<geom::Point2D> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) pts.push_back(sampler.sample(rng));
    return pts;
}

std::vector<geom::Point2D> sample_ppp(const analytic::InterferenceModel& model,
                                      rng::Rng& rng) {
    return sample_ppp(LuneSampler(model.region), model, rng);
}

double aggregate_interference(std::span<const geom::Point2D> points,
                              const analytic::InterferenceModel& model,
                              rng::Rng& rng, double tx_power) {
    if (!(tx_power > 0.0))
        throw config_error("aggregate_interference: tx_power must be > 0");
    double sum = 0.0;
    for (const auto& p : points) {
        const double dist2 = p.x * p.x + p.y * p.y;
        if (dist2 == 0.0)
            throw math_domain_error(
                "aggregate_interference: node at the victim position");
        const double h = model.fading.kind == analytic::FadingKind::rayleigh
                             ? model.fading.mean_power * rng.expo()
                             : model.fading.mean_power;
        sum += tx_power * h * std::pow(dist2, -0.5 * model.alpha);
    }
    return sum;
}

namespace {

CampaignResult run_campaign_impl(const CampaignParams& params, bool parallel) {
    if (params.n_trials < 1)
        throw config_error("run_campaign: n_trials must be >= 1");
    const LuneSampler sampler(params.model.region);
    CampaignResult result;
    result.samples.resize(params.n_trials);
    result.n_nodes.resize(params.n_trials);
    result.seed_used = params.seed;
    const long n = static_cast<long>(params.n_trials);
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < n; ++i) {
        rng::Rng rng(params.seed, static_cast<std::uint64_t>(i));
        const auto pts = sample_ppp(sampler, params.model, rng);
        result.n_nodes[i] = static_cast<std::uint32_t>(pts.size());
        result.samples[i] =
            aggregate_interference(pts, params.model, rng, params.tx_power);
    }
    std::uint64_t node_total = 0;
    for (auto c : result.n_nodes) node_total += c;
    result.n_nodes_mean =
        static_cast<double>(node_total) / static_cast<double>(params.n_trials);
    return result;
}

}  // namespace

CampaignResult run_campaign(const CampaignParams& params) {
    return run_campaign_impl(params, true);
}

CampaignResult run_campaign_serial(const CampaignParams& params) {
    return run_campaign_impl(params, false);
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
    if (samples.size() < 2)
        throw math_domain_error("ks_distance: needs at least 2 samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max((i + 1.0) / n - f, f - i / n));
    }
    return d;
}

double stable_sample_one(const analytic::StableLaw& law, rng::Rng& rng) {
    const double eta = law.eta;
    const double u = kPi * rng.uniform();
    const double w = rng.expo();
    // Kanter's representation of the standard positive stable variable.
    const double a = std::pow(std::sin(eta * u), eta / (1.0 - eta)) *
                     std::sin((1.0 - eta) * u) /
                     std::pow(std::sin(u), 1.0 / (1.0 - eta));
    const double x = std::pow(a / w, (1.0 - eta) / eta);
    return std::pow(law.k, 1.0 / eta) * x;
}

std::vector<double> stable_sample(const analytic::StableLaw& law,
                                  std::size_t n, rng::Rng& rng) {
    if (!(law.eta > 0.0) || law.eta >= 1.0)
        throw math_domain_error("stable_sample: requires 0 < eta < 1");
    if (!(law.k > 0.0)) throw math_domain_error("stable_sample: requires K > 0");
    std::vector<double> out(n);
    for (auto& v : out) v = stable_sample_one(law, rng);
    return out;
}

}  // namespace agint::mcsim
