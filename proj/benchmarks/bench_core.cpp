#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "noma/allocation.hpp"
#include "noma/feasibility.hpp"
#include "noma/layout.hpp"
#include "noma/scheduler.hpp"

namespace {

std::vector<noma::Member> random_members(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> db(-5.0, 35.0);
    std::vector<noma::Member> out;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back({noma::UserId{static_cast<std::uint32_t>(k)}, noma::LinearSinr::from_db(db(rng))});
    }
    noma::sort_descending(out);
    return out;
}

void BM_ClusterFeasibility(benchmark::State& state) {
    const auto g = static_cast<std::size_t>(state.range(0));
    const noma::ClusterSpec cluster(random_members(g, 1), 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noma::cluster_feasibility(cluster));
    }
}
BENCHMARK(BM_ClusterFeasibility)->RangeMultiplier(2)->Range(2, 32);

void BM_AllocatePowers(benchmark::State& state) {
    const auto g = static_cast<std::size_t>(state.range(0));
    const noma::ClusterSpec cluster(random_members(g, 2), 0.0);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(noma::allocate_powers(cluster));
        } catch (const noma::InfeasibleAllocation&) {
        }
    }
}
BENCHMARK(BM_AllocatePowers)->RangeMultiplier(2)->Range(2, 32);

void BM_Layout64(benchmark::State& state) {
    const auto members = random_members(64, 3);
    const auto g = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(noma::layout_clusters(members, g));
    }
}
BENCHMARK(BM_Layout64)->RangeMultiplier(2)->Range(2, 32);

void BM_Amup64(benchmark::State& state) {
    const auto layout = noma::layout_clusters(random_members(64, 4), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(noma::run_amup(layout, 0.0));
    }
}
BENCHMARK(BM_Amup64)->RangeMultiplier(2)->Range(2, 32);

}  // namespace
