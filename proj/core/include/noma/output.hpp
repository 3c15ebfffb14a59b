#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "noma/experiment.hpp"

namespace noma {

/// Library version recorded in manifests.
std::string version();

/// `cdf_<policy>_<G>_<beta>.csv`, beta in shortest round-trip form.
std::string cdf_file_name(Policy policy, std::size_t cluster_size, double beta);

/// Writes into `directory` (created if needed):
///   summary.csv                   policy,G,beta,mean_cse
///   cdf_<policy>_<G>_<beta>.csv   value,cumulative_probability
///   manifest.json                 resolved config, seed, version, run counters
/// With no policies only the manifest is written. Returns the files written.
/// Throws std::runtime_error when the directory is not writable.
std::vector<std::filesystem::path> emit_outputs(const MetricsTable& table,
                                                const std::filesystem::path& directory);

}  // namespace noma
