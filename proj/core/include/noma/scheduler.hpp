#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "noma/allocation.hpp"
#include "noma/layout.hpp"
#include "noma/sinr.hpp"

namespace noma {

enum class Mode { kNoma, kOma };

std::string_view to_string(Mode mode) noexcept;

/// Users that share one slice of a layout cluster's resource. A NOMA group
/// is a (sub-)cluster served together in the power domain; every OMA user is
/// a group of its own.
struct Group {
    std::size_t source_cluster = 0;   ///< index into ClusterLayout::clusters
    Mode mode = Mode::kOma;
    double resource_fraction = 0.0;   ///< share of the source cluster's resource
    std::vector<UserId> members;      ///< strongest first
};

struct UserDecision {
    UserId id{};
    LinearSinr sinr{1.0};
    Mode mode = Mode::kOma;
    std::size_t group = 0;            ///< index into SchedulingOutcome::groups
    double resource_fraction = 0.0;
    std::optional<double> alpha;      ///< NOMA users only
    double rate = 0.0;                ///< bits/s/Hz
};

struct SchedulingOutcome {
    std::size_t cluster_size = 0;     ///< G of the layout that was scheduled
    std::vector<Group> groups;
    std::vector<UserDecision> users;  ///< in layout order
    /// Number of adjacent-pair feasibility evaluations performed.
    std::size_t pair_checks = 0;
    /// Groups that passed the pair checks but whose minimum powers did not
    /// fit in the budget; they were treated as failing the gate.
    std::size_t allocation_failures = 0;
};

struct SchedulerOptions {
    AllocationRule rule = AllocationRule::kAlgorithm;
};

/// Every user served orthogonally: 1/G of its cluster's resource.
SchedulingOutcome run_oma(const ClusterLayout& layout);

/// All-or-nothing per cluster: NOMA when every adjacent pair passes, OMA for
/// the whole cluster otherwise.
SchedulingOutcome run_mup(const ClusterLayout& layout, double beta,
                          const SchedulerOptions& options = {});

/// Like run_mup, but a failing cluster is split in two by the grid rule and
/// each half is tried again, down to single users which are served by OMA.
/// A sub-cluster of g users from a G-user cluster holds g/G of the resource;
/// its NOMA rates are scaled by that fraction.
SchedulingOutcome run_amup(const ClusterLayout& layout, double beta,
                           const SchedulerOptions& options = {});

/// NOMA for every cluster regardless of the gate. Clusters whose minimum
/// powers exceed the budget cannot be served this way and fall back to OMA
/// (counted in allocation_failures).
SchedulingOutcome run_ungated(const ClusterLayout& layout, double beta,
                              const SchedulerOptions& options = {});

struct CellMetrics {
    std::vector<double> rates;        ///< same order as SchedulingOutcome::users
    double spectral_efficiency = 0.0; ///< mean per-user rate
};

CellMetrics evaluate_rates(const SchedulingOutcome& outcome);

/// Worst-case number of pair checks for one cluster of size G under AMUP:
/// sum over levels g = G, G/2, ..., 2 of (G/g)(g-1) = G log2 G - (G-1).
std::size_t amup_worst_case_pair_checks(std::size_t cluster_size);

}  // namespace noma
