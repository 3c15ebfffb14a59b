#include "noma/scheduler.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "noma/feasibility.hpp"
#include "noma/rates.hpp"

namespace noma {

std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::kNoma ? "noma" : "oma";
}

namespace {

enum class Gate { kFeasibility, kNone };

class Scheduler {
public:
    Scheduler(const ClusterLayout& layout, double beta, const SchedulerOptions& options)
        : layout_(layout), beta_(beta), options_(options) {
        if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
        if (layout.cluster_size == 0) throw std::invalid_argument("empty layout");
        out_.cluster_size = layout.cluster_size;
    }

    SchedulingOutcome take() { return std::move(out_); }

    void serve_oma(std::size_t source, std::span<const Member> members) {
        const double share = 1.0 / static_cast<double>(layout_.cluster_size);
        for (const Member& m : members) {
            const std::size_t group = add_group(source, Mode::kOma, share, {&m, 1});
            UserDecision d;
            d.id = m.id;
            d.sinr = m.sinr;
            d.mode = Mode::kOma;
            d.group = group;
            d.resource_fraction = share;
            d.rate = oma_rate(m.sinr, layout_.cluster_size);
            out_.users.push_back(d);
        }
    }

    // Tries NOMA for the group; returns false (and serves nothing) when the
    // gate rejects it or its powers do not fit.
    bool try_noma(std::size_t source, const ClusterSpec& spec, double fraction, Gate gate) {
        if (gate == Gate::kFeasibility) {
            if (spec.size() < 2) return false;
            const FeasibilityReport report = cluster_feasibility(spec);
            out_.pair_checks += report.pairs.size();
            if (!report.cluster_pass) return false;
        }

        PowerAllocation alloc;
        try {
            alloc = allocate_powers(spec, options_.rule);
        } catch (const InfeasibleAllocation&) {
            ++out_.allocation_failures;
            return false;
        }

        const std::size_t group = add_group(source, Mode::kNoma, fraction, spec.members());
        for (std::size_t rank = 1; rank <= spec.size(); ++rank) {
            const Member& m = spec.at_rank(rank);
            UserDecision d;
            d.id = m.id;
            d.sinr = m.sinr;
            d.mode = Mode::kNoma;
            d.group = group;
            d.resource_fraction = fraction;
            d.alpha = alloc.alphas[rank - 1];
            d.rate = fraction * noma_rate(spec, alloc, rank);
            out_.users.push_back(d);
        }
        return true;
    }

    void adaptive(std::size_t source, const ClusterSpec& spec, double fraction) {
        if (try_noma(source, spec, fraction, Gate::kFeasibility)) return;
        if (spec.size() == 1) {
            serve_oma(source, spec.members());
            return;
        }
        for (const ClusterSpec& half : split_cluster(spec)) {
            adaptive(source, half, fraction / 2.0);
        }
    }

    ClusterSpec spec_for(std::size_t source) const {
        return ClusterSpec(layout_.clusters[source], beta_);
    }

    std::size_t clusters() const { return layout_.clusters.size(); }

private:
    std::size_t add_group(std::size_t source, Mode mode, double fraction,
                          std::span<const Member> members) {
        Group g;
        g.source_cluster = source;
        g.mode = mode;
        g.resource_fraction = fraction;
        g.members.reserve(members.size());
        for (const Member& m : members) g.members.push_back(m.id);
        out_.groups.push_back(std::move(g));
        return out_.groups.size() - 1;
    }

    const ClusterLayout& layout_;
    double beta_;
    SchedulerOptions options_;
    SchedulingOutcome out_;
};

}  // namespace

SchedulingOutcome run_oma(const ClusterLayout& layout) {
    Scheduler s(layout, 0.0, {});
    for (std::size_t r = 0; r < s.clusters(); ++r) s.serve_oma(r, layout.clusters[r]);
    return s.take();
}

SchedulingOutcome run_mup(const ClusterLayout& layout, double beta,
                          const SchedulerOptions& options) {
    Scheduler s(layout, beta, options);
    for (std::size_t r = 0; r < s.clusters(); ++r) {
        if (!s.try_noma(r, s.spec_for(r), 1.0, Gate::kFeasibility)) {
            s.serve_oma(r, layout.clusters[r]);
        }
    }
    return s.take();
}

SchedulingOutcome run_amup(const ClusterLayout& layout, double beta,
                           const SchedulerOptions& options) {
    Scheduler s(layout, beta, options);
    for (std::size_t r = 0; r < s.clusters(); ++r) s.adaptive(r, s.spec_for(r), 1.0);
    return s.take();
}

SchedulingOutcome run_ungated(const ClusterLayout& layout, double beta,
                              const SchedulerOptions& options) {
    Scheduler s(layout, beta, options);
    for (std::size_t r = 0; r < s.clusters(); ++r) {
        if (!s.try_noma(r, s.spec_for(r), 1.0, Gate::kNone)) {
            s.serve_oma(r, layout.clusters[r]);
        }
    }
    return s.take();
}

CellMetrics evaluate_rates(const SchedulingOutcome& outcome) {
    CellMetrics metrics;
    metrics.rates.reserve(outcome.users.size());
    for (const UserDecision& d : outcome.users) metrics.rates.push_back(d.rate);
    if (!metrics.rates.empty()) {
        metrics.spectral_efficiency =
            std::accumulate(metrics.rates.begin(), metrics.rates.end(), 0.0) /
            static_cast<double>(metrics.rates.size());
    }
    return metrics;
}

std::size_t amup_worst_case_pair_checks(std::size_t cluster_size) {
    if (!is_power_of_two(cluster_size)) {
        throw std::invalid_argument("cluster size must be a power of two");
    }
    const std::size_t levels = static_cast<std::size_t>(std::countr_zero(cluster_size));
    return cluster_size * levels - (cluster_size - 1);
}

}  // namespace noma
