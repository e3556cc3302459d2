#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "agint/analytic.hpp"
#include "agint/geometry.hpp"
#include "agint/rng.hpp"

namespace agint::mcsim {

struct CampaignParams {
    analytic::InterferenceModel model;
    std::size_t n_trials = 10000;
    std::uint64_t seed = 1;
    double tx_power = 1.0;
};

struct CampaignResult {
    std::vector<double> samples;       // aggregate interference per trial
    std::vector<std::uint32_t> n_nodes;  // node count per trial
    double n_nodes_mean = 0.0;
    std::uint64_t seed_used = 0;
    const char* rng_name = rng::Rng::kName;
};

// Uniform sampler over the admissible region. Rejection from the
// enclosing disk by default; thin regions (acceptance < 1%) switch to a
// tabulated radial inverse-CDF with exact angular sampling.
class LuneSampler {
  public:
    explicit LuneSampler(const geom::RegionSpec& region);
    geom::Point2D sample(rng::Rng& rng) const;
    double area() const { return lune_.area; }
    bool uses_rejection() const { return use_rejection_; }

  private:
    geom::RegionSpec region_;
    geom::LuneGeometry lune_;
    bool use_rejection_;
    std::vector<double> r_grid_;
    std::vector<double> cum_;  // cumulative radial mass over r_grid_
};

// Poisson(lambda * area) node positions uniform on the admissible region.
std::vector<geom::Point2D> sample_ppp(const analytic::InterferenceModel& model,
                                      rng::Rng& rng);
std::vector<geom::Point2D> sample_ppp(const LuneSampler& sampler,
                                      const analytic::InterferenceModel& model,
                                      rng::Rng& rng);

// Sum of P h ||x||^-alpha at the origin; fading gains drawn per point.
double aggregate_interference(std::span<const geom::Point2D> points,
                              const analytic::InterferenceModel& model,
                              rng::Rng& rng, double tx_power = 1.0);

CampaignResult run_campaign(const CampaignParams& params);         // OpenMP
CampaignResult run_campaign_serial(const CampaignParams& params);  // reference

// Sup-norm distance between the empirical CDF of the samples and the
// supplied distribution function.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

// Direct one-sided stable sampler (Kanter construction), LT exp(-K s^eta).
std::vector<double> stable_sample(const analytic::StableLaw& law,
                                  std::size_t n, rng::Rng& rng);
double stable_sample_one(const analytic::StableLaw& law, rng::Rng& rng);

std::uint64_t poisson_count(rng::Rng& rng, double mean);

}  // namespace agint::mcsim
