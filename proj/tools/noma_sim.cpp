// noma-sim: Monte Carlo evaluation of multi-user NOMA clustering.
//
//   noma-sim run --config cfg.json [--drops N] [--seed S] [--policies a,b]
//                [--g-values 2,4,8] [--beta-values 0,0.01] [--out DIR]
//   noma-sim verify [--seed S]
//   noma-sim dump-gains --config cfg.json --drop K [--out FILE]
//   noma-sim show-config [--config cfg.json]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noma/config_io.hpp"
#include "noma/experiment.hpp"
#include "noma/network.hpp"
#include "noma/output.hpp"
#include "noma/verify.hpp"

namespace {

struct RunArgs {
    std::string config;
    std::optional<std::size_t> drops;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> policies;
    std::vector<std::size_t> g_values;
    std::vector<double> beta_values;
    std::optional<std::string> out;
    std::optional<std::string> rule;
    std::optional<unsigned> threads;
};

noma::ExperimentConfig resolve(const RunArgs& args) {
    noma::ExperimentConfig config =
        args.config.empty() ? noma::ExperimentConfig{} : noma::load_experiment_config(args.config);
    if (args.drops) config.drops = *args.drops;
    if (args.seed) config.radio.seed = *args.seed;
    if (!args.policies.empty()) {
        config.policies.clear();
        for (const std::string& p : args.policies) {
            if (p != "none") config.policies.push_back(noma::policy_from_string(p));
        }
    }
    if (!args.g_values.empty()) config.g_values = args.g_values;
    if (!args.beta_values.empty()) config.beta_values = args.beta_values;
    if (args.out) config.output_dir = *args.out;
    if (args.rule) config.rule = noma::allocation_rule_from_string(*args.rule);
    if (args.threads) config.threads = *args.threads;
    config.validate();
    config.canonicalize();
    return config;
}

int cmd_run(const RunArgs& args) {
    const noma::ExperimentConfig config = resolve(args);
    const noma::MetricsTable table = noma::run_experiment(config);
    const auto files = noma::emit_outputs(table, config.output_dir);

    std::cout << "drops=" << table.stats.drops << " pools=" << table.stats.pools
              << " skipped_bs=" << table.stats.skipped_bs
              << " regenerations=" << table.stats.regenerations
              << " allocation_failures=" << table.stats.allocation_failures << "\n";
    for (const noma::AggregateRow& a : table.aggregates) {
        std::cout << "  " << noma::to_string(a.policy) << " G=" << a.cluster_size
                  << " beta=" << a.beta << " mean_cse=" << a.mean_cse << "\n";
    }
    std::cout << "wrote " << files.size() << " files to " << config.output_dir << "\n";
    return 0;
}

int cmd_verify(std::uint64_t seed) {
    int failed = 0;
    for (const noma::PropertyResult& r : noma::run_core_properties(seed)) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases
                  << " failures=" << r.failures;
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
        if (!r.passed()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}

int cmd_dump_gains(const RunArgs& args, std::uint64_t drop) {
    const noma::ExperimentConfig config = resolve(args);
    const noma::Deployment d = noma::generate_drop(config.radio, drop);
    if (!args.out) {
        noma::write_gain_dump(d, std::cout);
        return 0;
    }
    std::ofstream out(*args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + *args.out + "'");
    noma::write_gain_dump(d, out);
    return out ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-user NOMA clustering and power allocation simulator"};
    app.require_subcommand(1);

    RunArgs args;
    auto add_common = [&args](CLI::App* sub) {
        sub->add_option("--config", args.config, "Experiment config (JSON)");
        sub->add_option("--seed", args.seed, "Override radio.seed");
    };

    CLI::App* run = app.add_subcommand("run", "Run an experiment and write CSV/JSON outputs");
    add_common(run);
    run->add_option("--drops", args.drops, "Number of drops");
    run->add_option("--policies", args.policies,
                    "Comma list of oma,mup,amup,near_far,aup2 (or 'none')")
        ->delimiter(',');
    run->add_option("--g-values", args.g_values, "Comma list of cluster sizes")->delimiter(',');
    run->add_option("--beta-values", args.beta_values, "Comma list of SIC imperfections")
        ->delimiter(',');
    run->add_option("--out", args.out, "Output directory");
    run->add_option("--allocation-rule", args.rule, "algorithm | beta_aware");
    run->add_option("--threads", args.threads, "Worker threads (0 = all cores)");

    std::uint64_t verify_seed = 7;
    CLI::App* verify = app.add_subcommand("verify", "Run the core property suites");
    verify->add_option("--seed", verify_seed, "Seed for randomized suites");

    std::uint64_t dump_drop = 0;
    CLI::App* dump = app.add_subcommand("dump-gains", "Write per-link gains of one drop as CSV");
    add_common(dump);
    dump->add_option("--drop", dump_drop, "Drop index");
    dump->add_option("--out", args.out, "Output CSV (default stdout)");

    CLI::App* show = app.add_subcommand("show-config", "Print the resolved config as JSON");
    add_common(show);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(args);
        if (*verify) return cmd_verify(verify_seed);
        if (*dump) return cmd_dump_gains(args, dump_drop);
        if (*show) {
            std::cout << noma::experiment_config_to_json(resolve(args)) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "noma-sim: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
