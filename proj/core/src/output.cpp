#include "noma/output.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "noma/config_io.hpp"
#include "noma/format.hpp"

#ifndef NOMA_VERSION
#define NOMA_VERSION "0.0.0"
#endif

namespace noma {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

std::string version() { return NOMA_VERSION; }

std::string cdf_file_name(Policy policy, std::size_t cluster_size, double beta) {
    return "cdf_" + std::string(to_string(policy)) + "_" + std::to_string(cluster_size) + "_" +
           format_double(beta) + ".csv";
}

std::vector<std::filesystem::path> emit_outputs(const MetricsTable& table,
                                                const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + directory.string() +
                                 "': " + ec.message());
    }

    std::vector<std::filesystem::path> written;

    if (!table.config.policies.empty()) {
        const auto summary_path = directory / "summary.csv";
        std::ofstream summary = open_for_write(summary_path);
        summary << "policy,G,beta,mean_cse\n";
        for (const AggregateRow& a : table.aggregates) {
            summary << to_string(a.policy) << ',' << a.cluster_size << ','
                    << format_double(a.beta) << ',' << format_double(a.mean_cse) << '\n';
        }
        finish(summary, summary_path);
        written.push_back(summary_path);

        for (const AggregateRow& a : table.aggregates) {
            const auto path = directory / cdf_file_name(a.policy, a.cluster_size, a.beta);
            std::ofstream cdf = open_for_write(path);
            cdf << "value,cumulative_probability\n";
            const double n = static_cast<double>(a.cdf.size());
            for (std::size_t k = 0; k < a.cdf.size(); ++k) {
                cdf << format_double(a.cdf[k]) << ','
                    << format_double(static_cast<double>(k + 1) / n) << '\n';
            }
            finish(cdf, path);
            written.push_back(path);
        }
    }

    nlohmann::ordered_json manifest;
    manifest["tool"] = "noma-sim";
    manifest["version"] = version();
    manifest["seed"] = table.config.radio.seed;
    manifest["noise_power_dbm"] = table.config.radio.noise_power_dbm();
    manifest["config"] = nlohmann::ordered_json::parse(experiment_config_to_json(table.config));
    manifest["stats"] = {
        {"drops", table.stats.drops},
        {"pools", table.stats.pools},
        {"measured_bs", table.stats.measured_bs},
        {"skipped_bs", table.stats.skipped_bs},
        {"regenerations", table.stats.regenerations},
        {"allocation_failures", table.stats.allocation_failures},
    };
    const auto manifest_path = directory / "manifest.json";
    std::ofstream out = open_for_write(manifest_path);
    out << manifest.dump(2) << '\n';
    finish(out, manifest_path);
    written.push_back(manifest_path);
    return written;
}

}  // namespace noma
