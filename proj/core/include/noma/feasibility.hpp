#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "noma/sinr.hpp"

namespace noma {

/// Outcome of the two checks on one adjacent pair (rank-1, rank).
struct PairCheck {
    std::size_t rank = 0;            ///< rank of the weaker user, in [2, G]
    double msd_threshold = 0.0;
    std::optional<double> zeta;      ///< empty where the closed form is undefined
    bool msd_pass = false;
    bool beta_pass = false;
    bool pair_pass = false;
};

struct FeasibilityReport {
    std::vector<PairCheck> pairs;
    bool cluster_pass = false;

    /// Smallest defined zeta over the pairs, i.e. the beta limit of the
    /// whole cluster. Empty when no pair has a defined zeta.
    std::optional<double> binding_zeta() const;
};

/// Runs the MSD check and the beta ordering check on all G-1 adjacent pairs.
/// A single-user cluster has no pairs and reports cluster_pass = false: such
/// a user is served by OMA.
FeasibilityReport cluster_feasibility(const ClusterSpec& cluster);

}  // namespace noma
