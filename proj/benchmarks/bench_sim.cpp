#include <benchmark/benchmark.h>

#include "noma/experiment.hpp"
#include "noma/network.hpp"

static void BM_GenerateDrop(benchmark::State& state) {
    noma::RadioConfig radio;
    std::uint64_t drop = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(noma::generate_drop(radio, drop++));
    }
}
BENCHMARK(BM_GenerateDrop)->Unit(benchmark::kMillisecond);

static void BM_CollectPools(benchmark::State& state) {
    noma::RadioConfig radio;
    std::uint64_t drop = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(noma::collect_pools(radio, drop++));
    }
}
BENCHMARK(BM_CollectPools)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
