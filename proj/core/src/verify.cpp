#include "noma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "noma/bounds.hpp"
#include "noma/feasibility.hpp"
#include "noma/rates.hpp"
#include "noma/sinr.hpp"

namespace noma {
namespace {

class ClusterDraw {
public:
    ClusterDraw(std::uint64_t seed, double min_db, double max_db)
        : rng_(seed), db_(min_db, max_db) {}

    std::vector<Member> members(std::size_t g) {
        std::vector<Member> out;
        out.reserve(g);
        for (std::size_t k = 0; k < g; ++k) {
            out.push_back(Member{UserId{static_cast<std::uint32_t>(k)}, LinearSinr::from_db(db_(rng_))});
        }
        sort_descending(out);
        return out;
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng_)];
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> db_;
};

}  // namespace

PropertyResult check_rate_guarantee(const GuaranteeOptions& options) {
    PropertyResult result;
    result.name = "rate guarantee (NOMA >= OMA for gate-passing clusters)";
    ClusterDraw draw(options.seed, options.min_db, options.max_db);

    std::size_t drawn = 0, gated_out = 0, no_fit = 0, shape_failures = 0;
    const std::size_t max_draws = options.feasible_clusters * 100 + 1000;
    while (result.cases < options.feasible_clusters && drawn < max_draws) {
        ++drawn;
        const std::size_t g = draw.pick(options.sizes);
        const double beta = draw.uniform(0.0, options.beta_max);
        const ClusterSpec cluster(draw.members(g), beta);
        if (!cluster_feasibility(cluster).cluster_pass) {
            ++gated_out;
            continue;
        }
        PowerAllocation alloc;
        try {
            alloc = allocate_powers(cluster, options.rule);
        } catch (const InfeasibleAllocation&) {
            ++no_fit;
            continue;
        }
        ++result.cases;
        if (!alloc.is_ordered() || std::abs(alloc.sum() - 1.0) > 1e-12) ++shape_failures;
        for (std::size_t rank = 1; rank <= g; ++rank) {
            const double oma = oma_rate(cluster.sinr_at_rank(rank), g);
            const double noma = noma_rate(cluster, alloc, rank);
            if (noma < oma * (1.0 - options.relative_tolerance)) {
                ++result.failures;
                break;
            }
        }
    }
    result.failures += shape_failures;
    std::ostringstream ss;
    ss << "drawn=" << drawn << " gated_out=" << gated_out << " allocation_rejected=" << no_fit
       << " accepted=" << result.cases << " shape_failures=" << shape_failures
       << " rule=" << to_string(options.rule);
    result.detail = ss.str();
    if (result.cases < options.feasible_clusters) {
        result.failures += options.feasible_clusters - result.cases;
        result.detail += " (too few accepted clusters)";
    }
    return result;
}

PropertyResult check_allocation_shape(std::uint64_t seed, std::size_t clusters, double beta_max,
                                      AllocationRule rule) {
    PropertyResult result;
    result.name = std::string("allocation ordering and sum (") + std::string(to_string(rule)) + ")";
    ClusterDraw draw(seed, 0.0, 30.0);
    const std::vector<std::size_t> sizes = {2, 4, 8};
    std::size_t attempts = 0, rejected = 0;
    while (result.cases < clusters && attempts < clusters * 100) {
        ++attempts;
        const std::size_t g = draw.pick(sizes);
        const ClusterSpec cluster(draw.members(g), draw.uniform(0.0, beta_max));
        if (!cluster_feasibility(cluster).cluster_pass) continue;
        ++result.cases;
        try {
            const PowerAllocation alloc = allocate_powers(cluster, rule);
            const bool ok = alloc.is_ordered() && alloc.residual > 0.0 &&
                            std::abs(alloc.sum() - 1.0) <= 1e-12;
            if (!ok) ++result.failures;
        } catch (const InfeasibleAllocation&) {
            ++rejected;
            ++result.failures;
        }
    }
    result.detail = "allocation_rejected=" + std::to_string(rejected);
    return result;
}

PropertyResult check_bound_consistency(std::uint64_t seed, std::size_t cases) {
    PropertyResult result;
    result.name = "strict bound >= sufficient bound";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> db(0.0, 30.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t sizes[] = {2, 4, 8, 16, 32};
    std::size_t skipped = 0;
    for (std::size_t k = 0; k < cases; ++k) {
        const std::size_t g = sizes[k % 5];
        const std::size_t rank = 1 + static_cast<std::size_t>(unit(rng) * static_cast<double>(g)) % g;
        const double beta = unit(rng);
        const LinearSinr gamma = LinearSinr::from_db(db(rng));
        const double strict = alpha_lower_bound_strict(gamma, g, rank, beta);
        const double lower_tail = static_cast<double>(g - rank) * strict;
        if (lower_tail >= 1.0) {
            ++skipped;
            continue;
        }
        // Any tail strictly above (G - rank) * strict and below 1.
        const double tail = lower_tail + (1.0 - lower_tail) * (0.5 * unit(rng) + 0.25);
        ++result.cases;
        const double sufficient = alpha_lower_bound_sufficient(gamma, g, beta, tail);
        if (strict < sufficient) ++result.failures;
    }
    result.detail = "skipped_without_valid_tail=" + std::to_string(skipped);
    return result;
}

PropertyResult check_zeta_equivalence() {
    PropertyResult result;
    result.name = "zeta closed form matches ordering inequality";
    const std::size_t sizes[] = {2, 4, 8, 16, 32};
    std::size_t undefined = 0;
    for (std::size_t g : sizes) {
        for (std::size_t rank = 2; rank <= g; ++rank) {
            for (int hi_db = -10; hi_db <= 40; hi_db += 2) {
                for (int lo_db = -10; lo_db <= hi_db; lo_db += 3) {
                    const LinearSinr prev = LinearSinr::from_db(hi_db);
                    const LinearSinr curr = LinearSinr::from_db(lo_db);
                    const std::optional<double> zeta = zeta_bound(prev, curr, g, rank);
                    if (!zeta) {
                        ++undefined;
                        continue;
                    }
                    for (int step = 0; step <= 100; ++step) {
                        const double beta = step / 100.0;
                        ++result.cases;
                        if (beta_ordering_check(prev, curr, g, rank, beta) != (beta < *zeta)) {
                            ++result.failures;
                        }
                    }
                }
            }
        }
    }
    result.detail = "undefined_zeta_pairs=" + std::to_string(undefined);
    return result;
}

PropertyResult check_f_monotone() {
    PropertyResult result;
    result.name = "F strictly decreasing in cluster size";
    for (int tenth_db = -300; tenth_db <= 500; tenth_db += 5) {
        const LinearSinr gamma = LinearSinr::from_db(tenth_db / 10.0);
        double previous = f_fun(gamma, 1);
        for (std::size_t g = 2; g <= 64; ++g) {
            const double current = f_fun(gamma, g);
            ++result.cases;
            if (!(current < previous)) ++result.failures;
            previous = current;
        }
    }
    return result;
}

PropertyResult check_f_limit() {
    PropertyResult result;
    result.name = "F(gamma -> 0) -> 1/G";
    for (std::size_t g = 1; g <= 64; ++g) {
        ++result.cases;
        const double f = f_fun(LinearSinr(1e-8), g);
        if (std::abs(f - 1.0 / static_cast<double>(g)) > 1e-6) ++result.failures;
    }
    return result;
}

PropertyResult check_single_user_boundary(std::uint64_t seed, std::size_t cases) {
    PropertyResult result;
    result.name = "single-user cluster: alpha = 1, NOMA rate == OMA rate";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> db(-20.0, 50.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t k = 0; k < cases; ++k) {
        const LinearSinr gamma = LinearSinr::from_db(db(rng));
        const ClusterSpec cluster({Member{UserId{0}, gamma}}, unit(rng));
        const PowerAllocation alloc = allocate_powers(cluster);
        ++result.cases;
        if (alloc.alphas != std::vector<double>{1.0} ||
            noma_rate(cluster, alloc, 1) != oma_rate(gamma, 1)) {
            ++result.failures;
        }
    }
    return result;
}

std::vector<PropertyResult> run_core_properties(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    GuaranteeOptions guarantee;
    guarantee.seed = seed;
    out.push_back(check_rate_guarantee(guarantee));

    GuaranteeOptions perfect = guarantee;
    perfect.beta_max = 0.0;
    perfect.rule = AllocationRule::kAlgorithm;
    PropertyResult r = check_rate_guarantee(perfect);
    r.name += " [beta = 0, algorithm rule]";
    out.push_back(std::move(r));

    out.push_back(check_allocation_shape(seed + 1, 10000, 0.1, AllocationRule::kAlgorithm));
    out.push_back(check_bound_consistency(seed + 2, 20000));
    out.push_back(check_zeta_equivalence());
    out.push_back(check_f_monotone());
    out.push_back(check_f_limit());
    out.push_back(check_single_user_boundary(seed + 3, 1000));
    return out;
}

}  // namespace noma
