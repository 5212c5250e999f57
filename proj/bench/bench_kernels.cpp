// OpenMP kernels against their serial references.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "entrobound/bounds.hpp"
#include "entrobound/npim.hpp"

using namespace entrobound;

namespace {

NpimConfig config(int seeds) {
    NpimConfig c;
    c.s = 1.8;
    c.n_seeds = seeds;
    return c;
}

void BM_NpimParallel(benchmark::State& state) {
    const auto u = haar_unitary(static_cast<std::size_t>(state.range(0)), 1);
    const auto cfg = config(256);
    for (auto _ : state) benchmark::DoNotOptimize(npim_norm(u, cfg).value);
}

void BM_NpimSerial(benchmark::State& state) {
    const auto u = haar_unitary(static_cast<std::size_t>(state.range(0)), 1);
    const auto cfg = config(256);
    for (auto _ : state) benchmark::DoNotOptimize(npim_norm_serial(u, cfg).value);
}

void BM_MonteCarloNormParallel(benchmark::State& state) {
    const auto u = haar_unitary(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(montecarlo_norm(u, HolderPair(1.5), 50'000, 3).value);
}

void BM_MonteCarloNormSerial(benchmark::State& state) {
    const auto u = haar_unitary(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(montecarlo_norm_serial(u, HolderPair(1.5), 50'000, 3).value);
}

void BM_MonteCarloEntropyParallel(benchmark::State& state) {
    const auto u = haar_unitary(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(montecarlo_min_entropy(u, 1.0, 1.0, 50'000, 5).value);
}

void BM_MonteCarloEntropySerial(benchmark::State& state) {
    const auto u = haar_unitary(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(montecarlo_min_entropy_serial(u, 1.0, 1.0, 50'000, 5).value);
}

} // namespace

BENCHMARK(BM_NpimParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NpimSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloNormParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloNormSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloEntropyParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloEntropySerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
