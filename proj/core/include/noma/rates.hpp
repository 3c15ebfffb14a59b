#pragma once

#include <cstddef>

#include "noma/sinr.hpp"

namespace noma {

/// log2(1 + x), evaluated through log1p.
double log2_1p(double x) noexcept;

/// Normalized OMA rate in bits/s/Hz when `cluster_size` users split the
/// resource orthogonally: (1/G) log2(1 + gamma).
double oma_rate(LinearSinr gamma, std::size_t cluster_size);

/// SINR of the member at `rank` (1-based) after SIC: it sees the weaker-power
/// signals of stronger users in full and the cancelled signals of weaker
/// users scaled by the cluster's beta.
LinearSinr noma_sinr(const ClusterSpec& cluster, const PowerAllocation& alloc,
                     std::size_t rank);

/// log2(1 + noma_sinr(cluster, alloc, rank)).
double noma_rate(const ClusterSpec& cluster, const PowerAllocation& alloc, std::size_t rank);

}  // namespace noma
