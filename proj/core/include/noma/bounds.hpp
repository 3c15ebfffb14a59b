#pragma once

#include <cstddef>
#include <optional>

#include "noma/sinr.hpp"

namespace noma {

/// Below this SINR the F factor is evaluated from its series expansion.
inline constexpr double kSeriesThreshold = 1e-6;

/// F(gamma) = ((1+gamma)^(1/G) - 1) / (gamma (1+gamma)^(1/G)).
///
/// The minimum NOMA SINR that matches the OMA rate is (1+gamma)^(1/G) - 1;
/// F is that threshold per unit of the user's SINR, deflated by
/// (1+gamma)^(1/G). For gamma below kSeriesThreshold the 0/0 form is replaced
/// by (1/G)(1 - (G+1)/(2G) gamma), continuous with 1/G at zero.
double f_fun(LinearSinr gamma, std::size_t cluster_size);

/// Minimum power fraction for a user given the power already assigned to
/// the weaker users behind it (`tail_sum`):
///   (1 + (1 + (beta-1) tail_sum) gamma) F(gamma).
/// The user beats its OMA rate when its fraction strictly exceeds this value
/// and the cluster's fractions add up to one. Throws std::invalid_argument
/// unless 0 <= tail_sum < 1 and beta is in [0, 1].
double alpha_lower_bound_sufficient(LinearSinr gamma, std::size_t cluster_size, double beta,
                                    double tail_sum);

/// Minimum power fraction that depends only on the user's own SINR and rank,
/// obtained by replacing the tail with its ordering lower bound (G-rank)*alpha:
///   (1+gamma) F / (1 - (beta-1)(G-rank) gamma F).
double alpha_lower_bound_strict(LinearSinr gamma, std::size_t cluster_size, std::size_t rank,
                                double beta);

/// Shared terms of the ordering condition between ranks i-1 and i.
struct PairTerms {
    double d;              ///< ratio of the no-tail bounds, prev over curr
    double e_curr;         ///< (G-i) gamma_i F(gamma_i)
    double e_prev;         ///< (G-i+1) gamma_{i-1} F(gamma_{i-1})
};

/// `rank` is the 1-based rank i of the weaker user of the pair, in [2, G].
PairTerms pair_terms(LinearSinr gamma_prev, LinearSinr gamma_curr, std::size_t cluster_size,
                     std::size_t rank);

/// Largest beta for which the strict bounds of the pair stay ordered:
///   zeta = (1 - D) / (E_{i-1} - D E_i) + 1.
/// Empty when E_{i-1} - D E_i <= 0; use beta_ordering_check there.
std::optional<double> zeta_bound(LinearSinr gamma_prev, LinearSinr gamma_curr,
                                 std::size_t cluster_size, std::size_t rank);

/// 1 - (beta-1) E_{i-1} > D (1 - (beta-1) E_i), evaluated without dividing.
/// Equivalent to beta < zeta wherever zeta is defined.
bool beta_ordering_check(LinearSinr gamma_prev, LinearSinr gamma_curr, std::size_t cluster_size,
                         std::size_t rank, double beta);

/// Minimum SINR difference the pair needs:
///   (D E_i + D - 1) / ((G-i+1) F(gamma_{i-1})) - gamma_i.
/// The pair passes when gamma_{i-1} - gamma_i exceeds it. May be negative.
double msd_threshold(LinearSinr gamma_prev, LinearSinr gamma_curr, std::size_t cluster_size,
                     std::size_t rank);

}  // namespace noma
