#include "noma/feasibility.hpp"

#include <algorithm>

#include "noma/bounds.hpp"

namespace noma {

std::optional<double> FeasibilityReport::binding_zeta() const {
    std::optional<double> best;
    for (const PairCheck& p : pairs) {
        if (p.zeta && (!best || *p.zeta < *best)) best = p.zeta;
    }
    return best;
}

FeasibilityReport cluster_feasibility(const ClusterSpec& cluster) {
    FeasibilityReport report;
    const std::size_t g = cluster.size();
    if (g < 2) return report;

    report.pairs.reserve(g - 1);
    for (std::size_t rank = 2; rank <= g; ++rank) {
        const LinearSinr prev = cluster.sinr_at_rank(rank - 1);
        const LinearSinr curr = cluster.sinr_at_rank(rank);

        PairCheck check;
        check.rank = rank;
        check.msd_threshold = msd_threshold(prev, curr, g, rank);
        check.zeta = zeta_bound(prev, curr, g, rank);
        check.msd_pass = prev.value() - curr.value() > check.msd_threshold;
        check.beta_pass = beta_ordering_check(prev, curr, g, rank, cluster.beta());
        check.pair_pass = check.msd_pass && check.beta_pass;
        report.pairs.push_back(check);
    }
    report.cluster_pass = std::all_of(report.pairs.begin(), report.pairs.end(),
                                      [](const PairCheck& p) { return p.pair_pass; });
    return report;
}

}  // namespace noma
