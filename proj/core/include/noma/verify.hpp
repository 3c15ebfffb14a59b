#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "noma/allocation.hpp"

namespace noma {

/// Result of one randomized or swept property check.
struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;

    bool passed() const noexcept { return cases > 0 && failures == 0; }
};

struct GuaranteeOptions {
    std::uint64_t seed = 7;
    std::size_t feasible_clusters = 10000;
    std::vector<std::size_t> sizes = {2, 4, 8};
    double min_db = 0.0;
    double max_db = 30.0;
    double beta_max = 0.1;
    /// kAlgorithm is only rate-safe at beta = 0; with beta > 0 the minimum
    /// powers have to be sized with the cluster's beta.
    AllocationRule rule = AllocationRule::kBetaAware;
    double relative_tolerance = 1e-9;
};

/// Draws sorted random clusters until `feasible_clusters` of them pass the
/// pair checks and get a power allocation, then checks that every member's
/// NOMA rate is at least its OMA rate. `detail` reports how many clusters
/// were drawn, gated out, and rejected by the allocation.
PropertyResult check_rate_guarantee(const GuaranteeOptions& options);

/// For gate-passing clusters: alphas strictly increase toward the weakest
/// user; the minimum powers leave a positive residual and the shared result
/// sums to one within 1e-12.
PropertyResult check_allocation_shape(std::uint64_t seed, std::size_t clusters, double beta_max,
                                      AllocationRule rule);

/// The rank-only bound dominates the tail-dependent bound for every tail
/// above (G - rank) times the rank-only bound.
PropertyResult check_bound_consistency(std::uint64_t seed, std::size_t cases);

/// Wherever zeta is defined, the division-free ordering check agrees with
/// beta < zeta over a SINR grid and beta in {0, 0.01, ..., 1}.
PropertyResult check_zeta_equivalence();

/// F decreases strictly with the cluster size for fixed gamma.
PropertyResult check_f_monotone();

/// F(1e-8, G) is within 1e-6 of 1/G.
PropertyResult check_f_limit();

/// A single-user cluster gets all the power and exactly its OMA rate.
PropertyResult check_single_user_boundary(std::uint64_t seed, std::size_t cases);

/// All suites above with their default sizes.
std::vector<PropertyResult> run_core_properties(std::uint64_t seed = 7);

}  // namespace noma
