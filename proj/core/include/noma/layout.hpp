#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "noma/sinr.hpp"

namespace noma {

/// The users of one base station that are up for scheduling.
class UserPool {
public:
    /// Throws std::invalid_argument when empty or when ids repeat.
    explicit UserPool(std::vector<Member> users);

    std::size_t size() const noexcept { return users_.size(); }
    std::span<const Member> users() const noexcept { return users_; }

private:
    std::vector<Member> users_;
};

/// N/G clusters of G users each; each cluster is sorted strongest first.
struct ClusterLayout {
    std::size_t cluster_size = 0;
    std::vector<std::vector<Member>> clusters;
};

bool is_power_of_two(std::size_t n) noexcept;

/// Near-far grid clustering. Users are sorted by descending SINR and written
/// column by column into an (N/G) x G grid; the columns in the second half
/// are then reversed so that rows pair strong users with weak ones. Row r
/// becomes cluster r.
///
/// Throws std::invalid_argument unless G is a power of two dividing N.
ClusterLayout layout_clusters(std::span<const Member> users, std::size_t cluster_size);
ClusterLayout layout_clusters(const UserPool& pool, std::size_t cluster_size);

/// Halves a cluster by re-running the grid clustering on its members with
/// size G/2. The halves are the pairs (or quads, ...) that a direct G/2
/// layout would produce for the same users. Throws for odd sizes.
std::array<ClusterSpec, 2> split_cluster(const ClusterSpec& cluster);

}  // namespace noma
