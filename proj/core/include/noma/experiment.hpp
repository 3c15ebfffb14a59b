#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "noma/allocation.hpp"
#include "noma/layout.hpp"
#include "noma/network.hpp"
#include "noma/scheduler.hpp"

namespace noma {

enum class Policy {
    kOma,
    kMup,
    kAmup,
    kNearFar,  ///< every near-far pair in NOMA, no gate
    kAup2,     ///< gated two-user pairing; approximates adaptive user pairing
};

/// Output label: "oma", "mup", "amup", "near_far", "aup2-approx".
std::string_view to_string(Policy policy) noexcept;
/// Case-insensitive; also accepts "aup2" for kAup2.
Policy policy_from_string(std::string_view name);

/// Pairing baselines ignore the cluster-size sweep and always use pairs.
bool is_pairing_baseline(Policy policy) noexcept;

struct ExperimentConfig {
    RadioConfig radio;
    std::vector<Policy> policies = {Policy::kOma, Policy::kMup, Policy::kAmup, Policy::kNearFar,
                                    Policy::kAup2};
    std::vector<std::size_t> g_values = {2, 4, 8, 16, 32};
    std::vector<double> beta_values = {0.0};
    std::size_t drops = 50;
    AllocationRule rule = AllocationRule::kAlgorithm;
    std::string output_dir = "out";
    /// Worker threads for drops; 0 picks the hardware concurrency. Results do
    /// not depend on it.
    unsigned threads = 0;

    /// Throws std::invalid_argument for an unusable configuration.
    void validate() const;
    /// Sorts and de-duplicates policies (by label), G values and betas.
    void canonicalize();
};

/// Two-user near-far pairing with every pair in NOMA. Requires a G=2 layout.
SchedulingOutcome baseline_near_far(const ClusterLayout& pairs, double beta,
                                    const SchedulerOptions& options = {});

/// Two-user near-far pairing behind the MSD/beta gate with OMA fallback.
/// Requires an even pool size.
SchedulingOutcome baseline_aup2(const UserPool& pool, double beta,
                                const SchedulerOptions& options = {});

/// Runs one policy on one pool.
SchedulingOutcome schedule(const UserPool& pool, Policy policy, std::size_t cluster_size,
                           double beta, const SchedulerOptions& options = {});

/// The evaluable pools of one drop.
struct DropPools {
    std::uint64_t drop_index = 0;
    std::vector<std::size_t> bs_ids;
    std::vector<UserPool> pools;
    std::size_t measured_bs = 0;
    std::size_t skipped_bs = 0;        ///< measured but serving too few users
    std::size_t regenerations = 0;
};

DropPools collect_pools(const RadioConfig& radio, std::uint64_t drop_index);

/// One cell spectral efficiency sample: one (drop, base station) pool under
/// one (policy, G, beta).
struct MetricsRow {
    Policy policy = Policy::kOma;
    std::size_t cluster_size = 0;
    double beta = 0.0;
    std::uint64_t drop = 0;
    std::size_t bs = 0;
    double cse = 0.0;
    std::size_t pair_checks = 0;
    std::size_t allocation_failures = 0;
};

struct AggregateRow {
    Policy policy = Policy::kOma;
    std::size_t cluster_size = 0;
    double beta = 0.0;
    double mean_cse = 0.0;
    /// Sorted samples; the k-th (1-based) has cumulative probability k/n.
    std::vector<double> cdf;
};

struct RunStats {
    std::size_t drops = 0;
    std::size_t pools = 0;
    std::size_t measured_bs = 0;
    std::size_t skipped_bs = 0;
    std::size_t regenerations = 0;
    std::size_t allocation_failures = 0;
};

struct MetricsTable {
    ExperimentConfig config;          ///< resolved, canonical
    std::vector<MetricsRow> rows;     ///< by drop, policy label, G, beta, bs
    std::vector<AggregateRow> aggregates;
    RunStats stats;

    /// Throws std::out_of_range when the combination was not run.
    const AggregateRow& aggregate(Policy policy, std::size_t cluster_size, double beta) const;
    /// CSE samples of one combination in row order.
    std::vector<double> samples(Policy policy, std::size_t cluster_size, double beta) const;
};

/// Validates the config, then evaluates every (drop, pool, policy, G, beta)
/// and aggregates means and CDFs.
MetricsTable run_experiment(ExperimentConfig config);

}  // namespace noma
