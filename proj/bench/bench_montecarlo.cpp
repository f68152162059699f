// Parallel vs serial sampling of Z_n and of the adaptively truncated Z.
#include <benchmark/benchmark.h>

#include "ramsey/montecarlo.hpp"
#include "ramsey/shock.hpp"

namespace {

using namespace ramsey;

SimConfig config(std::int64_t replicates, std::int64_t n) {
    SimConfig cfg;
    cfg.replicates = static_cast<std::size_t>(replicates);
    cfg.truncation = n > 0 ? Truncation::fixed(static_cast<std::size_t>(n)) : Truncation::adaptive();
    return cfg;
}

const ShockSpec kPareto = Pareto{3.0, 0.9};

void BM_SampleParallel(benchmark::State& state) {
    const SimConfig cfg = config(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sample_z(kPareto, cfg).samples.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleSerial(benchmark::State& state) {
    const SimConfig cfg = config(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sample_z_serial(kPareto, cfg).samples.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

// range(1) = 0 selects adaptive truncation.
BENCHMARK(BM_SampleParallel)->Args({3000, 20})->Args({100000, 10})->Args({3000, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Args({3000, 20})->Args({100000, 10})->Args({3000, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
