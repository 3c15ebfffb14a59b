#include "noma/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace noma {
namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct DropResult {
    std::vector<MetricsRow> rows;
    std::size_t measured_bs = 0;
    std::size_t skipped_bs = 0;
    std::size_t regenerations = 0;
    std::size_t pools = 0;
};

DropResult evaluate_drop(const ExperimentConfig& config, std::uint64_t drop) {
    const DropPools dp = collect_pools(config.radio, drop);
    DropResult result;
    result.measured_bs = dp.measured_bs;
    result.skipped_bs = dp.skipped_bs;
    result.regenerations = dp.regenerations;
    result.pools = dp.pools.size();

    const SchedulerOptions options{config.rule};
    for (Policy policy : config.policies) {
        for (std::size_t g : config.g_values) {
            for (double beta : config.beta_values) {
                for (std::size_t k = 0; k < dp.pools.size(); ++k) {
                    const SchedulingOutcome outcome =
                        schedule(dp.pools[k], policy, g, beta, options);
                    MetricsRow row;
                    row.policy = policy;
                    row.cluster_size = g;
                    row.beta = beta;
                    row.drop = drop;
                    row.bs = dp.bs_ids[k];
                    row.cse = evaluate_rates(outcome).spectral_efficiency;
                    row.pair_checks = outcome.pair_checks;
                    row.allocation_failures = outcome.allocation_failures;
                    result.rows.push_back(row);
                }
            }
        }
    }
    return result;
}

}  // namespace

std::string_view to_string(Policy policy) noexcept {
    switch (policy) {
        case Policy::kOma: return "oma";
        case Policy::kMup: return "mup";
        case Policy::kAmup: return "amup";
        case Policy::kNearFar: return "near_far";
        case Policy::kAup2: return "aup2-approx";
    }
    return "unknown";
}

Policy policy_from_string(std::string_view name) {
    const std::string n = lower(name);
    if (n == "oma") return Policy::kOma;
    if (n == "mup") return Policy::kMup;
    if (n == "amup") return Policy::kAmup;
    if (n == "near_far" || n == "near-far" || n == "nearfar") return Policy::kNearFar;
    if (n == "aup2" || n == "aup2-approx" || n == "aup2_approx") return Policy::kAup2;
    throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

bool is_pairing_baseline(Policy policy) noexcept {
    return policy == Policy::kNearFar || policy == Policy::kAup2;
}

void ExperimentConfig::validate() const {
    radio.validate();
    const std::size_t n = radio.users_per_bs;
    if (drops == 0) throw std::invalid_argument("drops must be >= 1");
    if (!policies.empty() && g_values.empty()) {
        throw std::invalid_argument("g_values must not be empty");
    }
    if (!policies.empty() && beta_values.empty()) {
        throw std::invalid_argument("beta_values must not be empty");
    }
    for (std::size_t g : g_values) {
        if (!is_power_of_two(g) || n % g != 0) {
            throw std::invalid_argument("G=" + std::to_string(g) +
                                        " must be a power of two dividing users_per_bs=" +
                                        std::to_string(n));
        }
    }
    for (double b : beta_values) {
        if (!(b >= 0.0 && b <= 1.0)) {
            throw std::invalid_argument("beta values must lie in [0, 1]");
        }
    }
    const bool pairing = std::any_of(policies.begin(), policies.end(), is_pairing_baseline);
    if (pairing && n % 2 != 0) {
        throw std::invalid_argument("pairing baselines need an even users_per_bs");
    }
}

void ExperimentConfig::canonicalize() {
    std::sort(policies.begin(), policies.end(),
              [](Policy a, Policy b) { return to_string(a) < to_string(b); });
    policies.erase(std::unique(policies.begin(), policies.end()), policies.end());
    std::sort(g_values.begin(), g_values.end());
    g_values.erase(std::unique(g_values.begin(), g_values.end()), g_values.end());
    std::sort(beta_values.begin(), beta_values.end());
    beta_values.erase(std::unique(beta_values.begin(), beta_values.end()), beta_values.end());
}

SchedulingOutcome baseline_near_far(const ClusterLayout& pairs, double beta,
                                    const SchedulerOptions& options) {
    if (pairs.cluster_size != 2) {
        throw std::invalid_argument("near-far baseline needs a two-user layout");
    }
    return run_ungated(pairs, beta, options);
}

SchedulingOutcome baseline_aup2(const UserPool& pool, double beta,
                                const SchedulerOptions& options) {
    if (pool.size() % 2 != 0) throw std::invalid_argument("pairing needs an even pool");
    return run_mup(layout_clusters(pool, 2), beta, options);
}

SchedulingOutcome schedule(const UserPool& pool, Policy policy, std::size_t cluster_size,
                           double beta, const SchedulerOptions& options) {
    switch (policy) {
        case Policy::kOma: return run_oma(layout_clusters(pool, cluster_size));
        case Policy::kMup: return run_mup(layout_clusters(pool, cluster_size), beta, options);
        case Policy::kAmup: return run_amup(layout_clusters(pool, cluster_size), beta, options);
        case Policy::kNearFar: return baseline_near_far(layout_clusters(pool, 2), beta, options);
        case Policy::kAup2: return baseline_aup2(pool, beta, options);
    }
    throw std::logic_error("unhandled policy");
}

DropPools collect_pools(const RadioConfig& radio, std::uint64_t drop_index) {
    const Deployment deployment = generate_drop(radio, drop_index);
    DropPools out;
    out.drop_index = drop_index;
    out.regenerations = deployment.regenerations;
    for (std::size_t bs = 0; bs < deployment.bs_count(); ++bs) {
        if (!deployment.measured[bs]) continue;
        ++out.measured_bs;
        std::optional<UserPool> pool =
            select_pool(deployment, bs, radio.users_per_bs, radio.seed);
        if (!pool) {
            ++out.skipped_bs;
            continue;
        }
        out.bs_ids.push_back(bs);
        out.pools.push_back(std::move(*pool));
    }
    return out;
}

const AggregateRow& MetricsTable::aggregate(Policy policy, std::size_t cluster_size,
                                            double beta) const {
    for (const AggregateRow& a : aggregates) {
        if (a.policy == policy && a.cluster_size == cluster_size && a.beta == beta) return a;
    }
    throw std::out_of_range("no aggregate for " + std::string(to_string(policy)) +
                            " G=" + std::to_string(cluster_size));
}

std::vector<double> MetricsTable::samples(Policy policy, std::size_t cluster_size,
                                          double beta) const {
    std::vector<double> out;
    for (const MetricsRow& r : rows) {
        if (r.policy == policy && r.cluster_size == cluster_size && r.beta == beta) {
            out.push_back(r.cse);
        }
    }
    return out;
}

MetricsTable run_experiment(ExperimentConfig config) {
    config.validate();
    config.canonicalize();

    std::vector<DropResult> results(config.drops);
    unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(config.drops));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t d = next++; d < config.drops; d = next++) {
            try {
                results[d] = evaluate_drop(config, d);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = config.drops;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
    }
    if (failure) std::rethrow_exception(failure);

    MetricsTable table;
    table.config = config;
    table.stats.drops = config.drops;
    for (DropResult& r : results) {
        table.stats.pools += r.pools;
        table.stats.measured_bs += r.measured_bs;
        table.stats.skipped_bs += r.skipped_bs;
        table.stats.regenerations += r.regenerations;
        for (const MetricsRow& row : r.rows) {
            table.stats.allocation_failures += row.allocation_failures;
        }
        table.rows.insert(table.rows.end(), r.rows.begin(), r.rows.end());
    }

    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;  // policy, G, beta positions
    std::map<Key, std::vector<double>> grouped;
    for (const MetricsRow& row : table.rows) {
        const auto p = static_cast<std::size_t>(
            std::find(config.policies.begin(), config.policies.end(), row.policy) -
            config.policies.begin());
        const auto g = static_cast<std::size_t>(
            std::find(config.g_values.begin(), config.g_values.end(), row.cluster_size) -
            config.g_values.begin());
        const auto b = static_cast<std::size_t>(
            std::find(config.beta_values.begin(), config.beta_values.end(), row.beta) -
            config.beta_values.begin());
        grouped[{p, g, b}].push_back(row.cse);
    }
    for (auto& [key, values] : grouped) {
        AggregateRow agg;
        agg.policy = config.policies[std::get<0>(key)];
        agg.cluster_size = config.g_values[std::get<1>(key)];
        agg.beta = config.beta_values[std::get<2>(key)];
        // Sum in row order before sorting so the mean is order-stable.
        double total = 0.0;
        for (double v : values) total += v;
        agg.mean_cse = total / static_cast<double>(values.size());
        std::sort(values.begin(), values.end());
        agg.cdf = std::move(values);
        table.aggregates.push_back(std::move(agg));
    }
    return table;
}

}  // namespace noma
