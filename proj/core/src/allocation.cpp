#include "noma/allocation.hpp"

#include <stdexcept>
#include <string>

#include "noma/bounds.hpp"

namespace noma {

std::string_view to_string(AllocationRule rule) noexcept {
    switch (rule) {
        case AllocationRule::kAlgorithm: return "algorithm";
        case AllocationRule::kBetaAware: return "beta_aware";
    }
    return "unknown";
}

AllocationRule allocation_rule_from_string(std::string_view name) {
    if (name == "algorithm") return AllocationRule::kAlgorithm;
    if (name == "beta_aware") return AllocationRule::kBetaAware;
    throw std::invalid_argument("unknown allocation rule '" + std::string(name) + "'");
}

PowerAllocation allocate_powers(const ClusterSpec& cluster, AllocationRule rule) {
    const std::size_t g = cluster.size();
    PowerAllocation alloc;
    if (g == 1) {
        alloc.alphas = {1.0};
        return alloc;
    }

    const double beta_alloc = rule == AllocationRule::kBetaAware ? cluster.beta() : 0.0;
    alloc.alphas.assign(g, 0.0);
    double tail = 0.0;
    for (std::size_t rank = g; rank >= 1; --rank) {
        if (tail >= 1.0) {
            throw InfeasibleAllocation(
                "minimum powers of the weaker users already exhaust the budget", tail);
        }
        const double alpha =
            alpha_lower_bound_sufficient(cluster.sinr_at_rank(rank), g, beta_alloc, tail);
        alloc.alphas[rank - 1] = alpha;
        tail += alpha;
    }

    if (!(tail < 1.0)) {
        throw InfeasibleAllocation(
            "minimum powers sum to " + std::to_string(tail) + ", no residual to share", tail);
    }
    alloc.residual = 1.0 - tail;
    const double share = alloc.residual / static_cast<double>(g);
    for (double& a : alloc.alphas) a += share;
    return alloc;
}

}  // namespace noma
