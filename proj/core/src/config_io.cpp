#include "noma/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace noma {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T get(const Json& obj, const char* key) {
    try {
        return obj.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

// Reads obj[key] into `field` when present.
template <typename T>
void read(const Json& obj, const char* key, T& field) {
    if (obj.contains(key)) field = get<T>(obj, key);
}

Json radio_to_json(const RadioConfig& r) {
    Json j;
    j["profile"] = r.profile;
    j["bs_density_per_km2"] = r.bs_density_per_km2;
    j["user_density_per_km2"] = r.user_density_per_km2;
    j["region_side_km"] = r.region_side_km;
    j["measure_inner_fraction"] = r.measure_inner_fraction;
    j["tx_power_dbm"] = r.tx_power_dbm;
    j["bandwidth_mhz"] = r.bandwidth_mhz;
    j["noise_figure_db"] = r.noise_figure_db;
    j["carrier_frequency_ghz"] = r.carrier_frequency_ghz;
    j["pathloss_model"] = std::string(to_string(r.pathloss));
    j["bs_height_m"] = r.bs_height_m;
    j["ut_height_m"] = r.ut_height_m;
    j["min_distance_m"] = r.min_distance_m;
    j["shadowing_sigma_db"] = r.shadowing_sigma_db;
    j["fading"] = std::string(to_string(r.fading));
    j["users_per_bs"] = r.users_per_bs;
    j["seed"] = r.seed;
    return j;
}

void apply_radio(const Json& j, RadioConfig& r) {
    if (!j.is_object()) throw ConfigError("radio config must be a JSON object");
    static const char* const kKeys[] = {
        "profile", "bs_density_per_km2", "user_density_per_km2", "region_side_km",
        "measure_inner_fraction", "tx_power_dbm", "bandwidth_mhz", "noise_figure_db",
        "carrier_frequency_ghz", "pathloss_model", "bs_height_m", "ut_height_m",
        "min_distance_m", "shadowing_sigma_db", "fading", "users_per_bs", "seed"};
    for (const auto& item : j.items()) {
        if (std::find(std::begin(kKeys), std::end(kKeys), item.key()) == std::end(kKeys)) {
            throw ConfigError("unknown radio key '" + item.key() + "'");
        }
    }
    read(j, "profile", r.profile);
    read(j, "bs_density_per_km2", r.bs_density_per_km2);
    read(j, "user_density_per_km2", r.user_density_per_km2);
    read(j, "region_side_km", r.region_side_km);
    read(j, "measure_inner_fraction", r.measure_inner_fraction);
    read(j, "tx_power_dbm", r.tx_power_dbm);
    read(j, "bandwidth_mhz", r.bandwidth_mhz);
    read(j, "noise_figure_db", r.noise_figure_db);
    read(j, "carrier_frequency_ghz", r.carrier_frequency_ghz);
    read(j, "bs_height_m", r.bs_height_m);
    read(j, "ut_height_m", r.ut_height_m);
    read(j, "min_distance_m", r.min_distance_m);
    read(j, "shadowing_sigma_db", r.shadowing_sigma_db);
    read(j, "users_per_bs", r.users_per_bs);
    read(j, "seed", r.seed);
    try {
        if (j.contains("pathloss_model")) {
            r.pathloss = pathloss_model_from_string(get<std::string>(j, "pathloss_model"));
        }
        if (j.contains("fading")) r.fading = fading_model_from_string(get<std::string>(j, "fading"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

Json experiment_to_json(const ExperimentConfig& c) {
    Json j;
    j["radio"] = radio_to_json(c.radio);
    Json policies = Json::array();
    for (Policy p : c.policies) policies.push_back(std::string(to_string(p)));
    j["policies"] = policies;
    j["g_values"] = c.g_values;
    j["beta_values"] = c.beta_values;
    j["drops"] = c.drops;
    j["allocation_rule"] = std::string(to_string(c.rule));
    j["output_dir"] = c.output_dir;
    j["threads"] = c.threads;
    return j;
}

ExperimentConfig experiment_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
    static const char* const kKeys[] = {"radio_profile", "radio",       "policies",
                                        "g_values",      "beta_values", "drops",
                                        "allocation_rule", "output_dir", "threads"};
    for (const auto& item : j.items()) {
        if (std::find(std::begin(kKeys), std::end(kKeys), item.key()) == std::end(kKeys)) {
            throw ConfigError("unknown config key '" + item.key() + "'");
        }
    }

    ExperimentConfig c;
    if (j.contains("radio_profile")) {
        std::filesystem::path profile = get<std::string>(j, "radio_profile");
        if (profile.is_relative()) profile = base_dir / profile;
        c.radio = load_radio_config(profile);
    }
    if (j.contains("radio")) apply_radio(j.at("radio"), c.radio);
    try {
        if (j.contains("policies")) {
            c.policies.clear();
            for (const auto& name : get<std::vector<std::string>>(j, "policies")) {
                c.policies.push_back(policy_from_string(name));
            }
        }
        if (j.contains("allocation_rule")) {
            c.rule = allocation_rule_from_string(get<std::string>(j, "allocation_rule"));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    read(j, "g_values", c.g_values);
    read(j, "beta_values", c.beta_values);
    read(j, "drops", c.drops);
    read(j, "output_dir", c.output_dir);
    read(j, "threads", c.threads);
    return c;
}

}  // namespace

std::string radio_config_to_json(const RadioConfig& radio, int indent) {
    return radio_to_json(radio).dump(indent);
}

std::string experiment_config_to_json(const ExperimentConfig& config, int indent) {
    return experiment_to_json(config).dump(indent);
}

RadioConfig radio_config_from_json(const std::string& text) {
    RadioConfig r;
    apply_radio(parse(text), r);
    return r;
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
    return experiment_from_json(parse(text), std::filesystem::current_path());
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    return experiment_from_json(parse(read_file(path)), path.parent_path());
}

RadioConfig load_radio_config(const std::filesystem::path& path) {
    return radio_config_from_json(read_file(path));
}

}  // namespace noma
