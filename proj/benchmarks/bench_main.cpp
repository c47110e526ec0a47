#include <benchmark/benchmark.h>

#include <cmath>

#include "purejump/aj.hpp"
#include "purejump/model.hpp"
#include "purejump/preaverage.hpp"
#include "purejump/teststat.hpp"

using namespace purejump;

namespace {

SamplePath fixture(std::size_t n) { return simulate(h0_mixture(1.5), n, 1.0, 12345); }

void bm_simulate_mixture(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(h0_mixture(1.5), n, 1.0, seed++));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(bm_simulate_mixture)->Arg(2340)->Arg(23400);

void bm_count_small(benchmark::State& state) {
    const auto path = fixture(static_cast<std::size_t>(state.range(0)));
    const double u = compute_alpha(ThresholdSpec::scaled(2.0, 2.0), path.n()) *
                     std::pow(path.delta_n(), 1.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_small(path, 1, 0, u));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_count_small)->Arg(2340)->Arg(23400);

void bm_v_tilde(benchmark::State& state) {
    const auto path = fixture(static_cast<std::size_t>(state.range(0)));
    const auto spec = ThresholdSpec::scaled(2.0, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(v_tilde(path, spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_v_tilde)->Arg(2340)->Arg(23400);

void bm_truncated_power_variation(benchmark::State& state) {
    const auto path = fixture(static_cast<std::size_t>(state.range(0)));
    const AjSpec spec;
    const double u = spec.u_n(path.delta_n());
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_power_variation(path, spec.p, u));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_truncated_power_variation)->Arg(23400);

void bm_preaverage_blocks(benchmark::State& state) {
    const auto path = fixture(23400);
    const auto spec = preavg_reference_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(preaverage_blocks(path, spec));
    }
    state.SetItemsProcessed(state.iterations() * 23400);
}
BENCHMARK(bm_preaverage_blocks);

}  // namespace

BENCHMARK_MAIN();
