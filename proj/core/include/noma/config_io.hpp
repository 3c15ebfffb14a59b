#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "noma/experiment.hpp"
#include "noma/network.hpp"

namespace noma {

/// Raised for unreadable or malformed configuration files.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON text of a config, keys in a fixed order.
std::string radio_config_to_json(const RadioConfig& radio, int indent = 2);
std::string experiment_config_to_json(const ExperimentConfig& config, int indent = 2);

/// Parses a config. Missing keys keep their defaults; unknown keys and
/// wrongly typed values raise ConfigError.
RadioConfig radio_config_from_json(const std::string& text);
ExperimentConfig experiment_config_from_json(const std::string& text);

ExperimentConfig load_experiment_config(const std::filesystem::path& path);
RadioConfig load_radio_config(const std::filesystem::path& path);

}  // namespace noma
