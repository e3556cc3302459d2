// OpenMP kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "agint/analytic.hpp"
#include "agint/ltinv.hpp"
#include "agint/mcsim.hpp"

namespace {

agint::mcsim::CampaignParams campaign_params(std::size_t trials) {
    agint::mcsim::CampaignParams params;
    params.model.alpha = 4.0;
    params.model.lambda = 0.05;
    params.model.region = {10.5, 0.0, 0.0, 0.01};
    params.n_trials = trials;
    params.seed = 1;
    return params;
}

std::vector<double> inversion_grid(int n) {
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = 0.05 * std::pow(100.0 / 0.05, double(i) / (n - 1));
    return grid;
}

void bm_campaign_serial(benchmark::State& state) {
    const auto params = campaign_params(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(agint::mcsim::run_campaign_serial(params));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_campaign_parallel(benchmark::State& state) {
    const auto params = campaign_params(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(agint::mcsim::run_campaign(params));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_invert_grid_serial(benchmark::State& state) {
    const auto lt = agint::ltinv::stable_lt(1.0, 0.45);
    const auto grid = inversion_grid(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            agint::ltinv::invert_grid(lt, grid, {}, false));
    state.SetItemsProcessed(state.iterations() * grid.size());
}

void bm_invert_grid_parallel(benchmark::State& state) {
    const auto lt = agint::ltinv::stable_lt(1.0, 0.45);
    const auto grid = inversion_grid(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(agint::ltinv::invert_grid(lt, grid, {}, true));
    state.SetItemsProcessed(state.iterations() * grid.size());
}

}  // namespace

BENCHMARK(bm_campaign_serial)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_campaign_parallel)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_invert_grid_serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_invert_grid_parallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
