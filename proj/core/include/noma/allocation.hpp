#pragma once

#include <string_view>

#include "noma/sinr.hpp"

namespace noma {

/// Which beta enters the minimum-power recursion.
enum class AllocationRule {
    /// Default recursion: residual interference is ignored when sizing
    /// each user's minimum power (beta_alloc = 0).
    kAlgorithm,
    /// Sizes each user's minimum power with the cluster's own beta.
    kBetaAware,
};

std::string_view to_string(AllocationRule rule) noexcept;
/// Accepts "algorithm" and "beta_aware"; throws std::invalid_argument otherwise.
AllocationRule allocation_rule_from_string(std::string_view name);

/// Assigns each member its minimum power fraction, weakest user first, then
/// shares what is left equally so the fractions sum to one.
///
/// The weakest user needs (1+gamma_G) F(gamma_G); every stronger user's
/// minimum depends on the power already assigned behind it. A single-user
/// cluster gets the full power.
///
/// Throws InfeasibleAllocation when the minimums of a cluster with G >= 2
/// already consume the full power (nothing left to share), which means the
/// cluster should not be served by NOMA.
PowerAllocation allocate_powers(const ClusterSpec& cluster,
                                AllocationRule rule = AllocationRule::kAlgorithm);

}  // namespace noma
