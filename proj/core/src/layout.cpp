#include "noma/layout.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace noma {

UserPool::UserPool(std::vector<Member> users) : users_(std::move(users)) {
    if (users_.empty()) throw std::invalid_argument("user pool is empty");
    std::unordered_set<std::uint32_t> seen;
    for (const Member& m : users_) {
        if (!seen.insert(to_index(m.id)).second) {
            throw std::invalid_argument("duplicate user id " + std::to_string(to_index(m.id)));
        }
    }
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

ClusterLayout layout_clusters(std::span<const Member> users, std::size_t cluster_size) {
    if (!is_power_of_two(cluster_size)) {
        throw std::invalid_argument("cluster size " + std::to_string(cluster_size) +
                                    " is not a power of two");
    }
    if (users.empty() || users.size() % cluster_size != 0) {
        throw std::invalid_argument("user count " + std::to_string(users.size()) +
                                    " is not a positive multiple of " +
                                    std::to_string(cluster_size));
    }

    std::vector<Member> sorted(users.begin(), users.end());
    sort_descending(sorted);

    const std::size_t rows = sorted.size() / cluster_size;
    // A single column stays top-down.
    const std::size_t half = cluster_size == 1 ? 1 : cluster_size / 2;

    ClusterLayout layout;
    layout.cluster_size = cluster_size;
    layout.clusters.assign(rows, {});
    for (std::size_t r = 0; r < rows; ++r) {
        auto& cluster = layout.clusters[r];
        cluster.reserve(cluster_size);
        for (std::size_t c = 0; c < cluster_size; ++c) {
            // Columns at or past the midpoint are read bottom-up.
            const std::size_t row_in_column = c < half ? r : rows - 1 - r;
            cluster.push_back(sorted[c * rows + row_in_column]);
        }
        sort_descending(cluster);
    }
    return layout;
}

ClusterLayout layout_clusters(const UserPool& pool, std::size_t cluster_size) {
    return layout_clusters(pool.users(), cluster_size);
}

std::array<ClusterSpec, 2> split_cluster(const ClusterSpec& cluster) {
    const std::size_t g = cluster.size();
    if (g < 2 || g % 2 != 0) {
        throw std::invalid_argument("cannot split a cluster of size " + std::to_string(g));
    }
    ClusterLayout halves = layout_clusters(cluster.members(), g / 2);
    return {ClusterSpec(std::move(halves.clusters[0]), cluster.beta()),
            ClusterSpec(std::move(halves.clusters[1]), cluster.beta())};
}

}  // namespace noma
