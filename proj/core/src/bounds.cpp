#include "noma/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noma {
namespace {

void check_cluster_size(std::size_t cluster_size) {
    if (cluster_size == 0) throw std::invalid_argument("cluster size must be >= 1");
}

void check_pair_rank(std::size_t cluster_size, std::size_t rank) {
    check_cluster_size(cluster_size);
    if (rank < 2 || rank > cluster_size) {
        throw std::invalid_argument("pair rank " + std::to_string(rank) + " outside [2, " +
                                    std::to_string(cluster_size) + "]");
    }
}

void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1]");
    }
}

}  // namespace

double f_fun(LinearSinr gamma, std::size_t cluster_size) {
    check_cluster_size(cluster_size);
    const double g = gamma.value();
    const double n = static_cast<double>(cluster_size);
    if (g < kSeriesThreshold) {
        return (1.0 / n) * (1.0 - ((n + 1.0) / (2.0 * n)) * g);
    }
    // root - 1 through expm1 keeps precision when gamma is small.
    const double root_minus_one = std::expm1(std::log1p(g) / n);
    return root_minus_one / (g * (1.0 + root_minus_one));
}

double alpha_lower_bound_sufficient(LinearSinr gamma, std::size_t cluster_size, double beta,
                                    double tail_sum) {
    check_beta(beta);
    if (!(tail_sum >= 0.0 && tail_sum < 1.0)) {
        throw std::invalid_argument("tail power sum must lie in [0, 1), got " +
                                    std::to_string(tail_sum));
    }
    const double g = gamma.value();
    return (1.0 + (1.0 + (beta - 1.0) * tail_sum) * g) * f_fun(gamma, cluster_size);
}

double alpha_lower_bound_strict(LinearSinr gamma, std::size_t cluster_size, std::size_t rank,
                                double beta) {
    check_cluster_size(cluster_size);
    check_beta(beta);
    if (rank < 1 || rank > cluster_size) throw std::invalid_argument("rank out of range");
    const double g = gamma.value();
    const double f = f_fun(gamma, cluster_size);
    const double behind = static_cast<double>(cluster_size - rank);
    const double denominator = 1.0 - (beta - 1.0) * behind * g * f;
    if (!(denominator > 0.0)) {
        throw std::logic_error("strict bound denominator is not positive");
    }
    return (1.0 + g) * f / denominator;
}

PairTerms pair_terms(LinearSinr gamma_prev, LinearSinr gamma_curr, std::size_t cluster_size,
                     std::size_t rank) {
    check_pair_rank(cluster_size, rank);
    const double gp = gamma_prev.value();
    const double gc = gamma_curr.value();
    const double fp = f_fun(gamma_prev, cluster_size);
    const double fc = f_fun(gamma_curr, cluster_size);
    const double behind = static_cast<double>(cluster_size - rank);

    PairTerms t{};
    t.d = ((1.0 + gp) * fp) / ((1.0 + gc) * fc);
    t.e_curr = behind * gc * fc;
    t.e_prev = (behind + 1.0) * gp * fp;
    return t;
}

std::optional<double> zeta_bound(LinearSinr gamma_prev, LinearSinr gamma_curr,
                                 std::size_t cluster_size, std::size_t rank) {
    const PairTerms t = pair_terms(gamma_prev, gamma_curr, cluster_size, rank);
    const double denominator = t.e_prev - t.d * t.e_curr;
    if (!(denominator > 0.0)) return std::nullopt;
    return (1.0 - t.d) / denominator + 1.0;
}

bool beta_ordering_check(LinearSinr gamma_prev, LinearSinr gamma_curr, std::size_t cluster_size,
                         std::size_t rank, double beta) {
    check_beta(beta);
    const PairTerms t = pair_terms(gamma_prev, gamma_curr, cluster_size, rank);
    return 1.0 - (beta - 1.0) * t.e_prev > t.d * (1.0 - (beta - 1.0) * t.e_curr);
}

double msd_threshold(LinearSinr gamma_prev, LinearSinr gamma_curr, std::size_t cluster_size,
                     std::size_t rank) {
    const PairTerms t = pair_terms(gamma_prev, gamma_curr, cluster_size, rank);
    const double slots = static_cast<double>(cluster_size - rank + 1);
    return (t.d * t.e_curr + t.d - 1.0) / (slots * f_fun(gamma_prev, cluster_size)) -
           gamma_curr.value();
}

}  // namespace noma
