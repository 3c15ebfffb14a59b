#include "noma/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noma {

double log2_1p(double x) noexcept { return std::log1p(x) / std::numbers::ln2; }

double oma_rate(LinearSinr gamma, std::size_t cluster_size) {
    if (cluster_size == 0) throw std::invalid_argument("cluster size must be >= 1");
    return log2_1p(gamma.value()) / static_cast<double>(cluster_size);
}

LinearSinr noma_sinr(const ClusterSpec& cluster, const PowerAllocation& alloc,
                     std::size_t rank) {
    if (alloc.size() != cluster.size()) {
        throw std::invalid_argument("allocation size does not match cluster size");
    }
    const double gamma = cluster.sinr_at_rank(rank).value();  // validates rank
    const std::size_t self = rank - 1;

    double stronger = 0.0;
    for (std::size_t j = 0; j < self; ++j) stronger += alloc.alphas[j];
    double weaker = 0.0;
    for (std::size_t k = self + 1; k < alloc.size(); ++k) weaker += alloc.alphas[k];

    const double signal = alloc.alphas[self] * gamma;
    const double interference = stronger * gamma + cluster.beta() * weaker * gamma;
    return LinearSinr(signal / (1.0 + interference));
}

double noma_rate(const ClusterSpec& cluster, const PowerAllocation& alloc, std::size_t rank) {
    return log2_1p(noma_sinr(cluster, alloc, rank).value());
}

}  // namespace noma
