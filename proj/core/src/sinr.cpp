#include "noma/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace noma {

LinearSinr::LinearSinr(double value) : value_(value) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw std::invalid_argument("LinearSinr must be finite and > 0, got " +
                                    std::to_string(value));
    }
}

LinearSinr LinearSinr::from_db(double db) {
    return LinearSinr(std::pow(10.0, db / 10.0));
}

double LinearSinr::db() const noexcept { return 10.0 * std::log10(value_); }

void sort_descending(std::vector<Member>& members) {
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
        if (a.sinr.value() != b.sinr.value()) return a.sinr.value() > b.sinr.value();
        return to_index(a.id) < to_index(b.id);
    });
}

ClusterSpec::ClusterSpec(std::vector<Member> members, double beta)
    : members_(std::move(members)), beta_(beta) {
    if (members_.empty()) {
        throw std::invalid_argument("ClusterSpec needs at least one member");
    }
    if (!(beta_ >= 0.0 && beta_ <= 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1], got " + std::to_string(beta_));
    }
    for (std::size_t k = 1; k < members_.size(); ++k) {
        if (members_[k].sinr.value() > members_[k - 1].sinr.value()) {
            throw std::invalid_argument("ClusterSpec members must be sorted by descending SINR");
        }
    }
}

const Member& ClusterSpec::at_rank(std::size_t rank) const {
    if (rank < 1 || rank > members_.size()) {
        throw std::out_of_range("rank " + std::to_string(rank) + " outside [1, " +
                                std::to_string(members_.size()) + "]");
    }
    return members_[rank - 1];
}

double PowerAllocation::sum() const noexcept {
    return std::accumulate(alphas.begin(), alphas.end(), 0.0);
}

bool PowerAllocation::is_ordered() const noexcept {
    return std::adjacent_find(alphas.begin(), alphas.end(),
                              [](double lo, double hi) { return !(lo < hi); }) == alphas.end();
}

}  // namespace noma
