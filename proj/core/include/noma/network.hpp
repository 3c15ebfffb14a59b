#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noma/layout.hpp"
#include "noma/sinr.hpp"

namespace noma {

enum class PathlossModel {
    kUmaNlos,    ///< 13.54 + 39.08 log10(d3D) + 20 log10(fc) - 0.6 (h_UT - 1.5)
    kFreeSpace,  ///< 32.45 + 20 log10(fc) + 20 log10(d3D)
};

enum class FadingModel {
    kRayleigh,   ///< unit-mean exponential power gain
    kNone,
};

std::string_view to_string(PathlossModel model) noexcept;
std::string_view to_string(FadingModel model) noexcept;
PathlossModel pathloss_model_from_string(std::string_view name);
FadingModel fading_model_from_string(std::string_view name);

/// Radio environment of one Monte Carlo drop. Defaults are the
/// "urban-macro-v1" profile shipped in profiles/urban_macro_v1.json.
struct RadioConfig {
    std::string profile = "urban-macro-v1";
    double bs_density_per_km2 = 25.0;
    double user_density_per_km2 = 2000.0;
    double region_side_km = 2.0;
    /// Only base stations inside the centred square with this fraction of the
    /// region side are evaluated, which keeps them away from the edges.
    double measure_inner_fraction = 0.5;
    double tx_power_dbm = 44.0;
    double bandwidth_mhz = 20.0;
    double noise_figure_db = 7.0;
    double carrier_frequency_ghz = 3.5;
    PathlossModel pathloss = PathlossModel::kUmaNlos;
    double bs_height_m = 25.0;
    double ut_height_m = 1.5;
    double min_distance_m = 10.0;
    double shadowing_sigma_db = 6.0;
    FadingModel fading = FadingModel::kRayleigh;
    std::size_t users_per_bs = 64;
    std::uint64_t seed = 1;

    /// Thermal noise over the bandwidth plus noise figure:
    /// -174 dBm/Hz + 10 log10(B) + NF.
    double noise_power_dbm() const noexcept;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const RadioConfig&, const RadioConfig&) = default;
};

/// Path loss in dB at a 3D distance.
double pathloss_db(const RadioConfig& config, double distance_3d_m);

struct Position {
    double x_m = 0.0;
    double y_m = 0.0;
};

/// One drop: node positions, per-link channel gains and the resulting
/// association and SINRs.
struct Deployment {
    std::uint64_t drop_index = 0;
    std::vector<Position> base_stations;
    std::vector<Position> users;
    std::vector<bool> measured;             ///< per base station
    /// Linear channel gain (path loss, shadowing, fading), row-major
    /// [user][base station].
    std::vector<double> gains;
    double tx_power_mw = 0.0;
    double noise_mw = 0.0;
    std::vector<std::size_t> serving;       ///< per user
    std::vector<LinearSinr> sinr;           ///< per user, toward serving
    /// Attempts discarded because they contained no base station.
    std::size_t regenerations = 0;

    std::size_t bs_count() const noexcept { return base_stations.size(); }
    std::size_t user_count() const noexcept { return users.size(); }
    double gain(std::size_t user, std::size_t bs) const {
        return gains[user * base_stations.size() + bs];
    }

    /// Builds a deployment from explicit gains; association and SINRs are
    /// derived. All base stations are marked measured.
    static Deployment from_gains(std::size_t users, std::size_t base_stations,
                                 std::vector<double> gains, double tx_power_mw,
                                 double noise_mw);

    /// Users served by `bs`, ascending.
    std::vector<std::size_t> users_of(std::size_t bs) const;
};

/// Draws one drop. Reproducible from (config.seed, drop_index) alone: each
/// drop owns its own random stream. A draw with zero base stations is
/// discarded and redrawn from a derived sub-seed (counted in regenerations).
Deployment generate_drop(const RadioConfig& config, std::uint64_t drop_index);

/// P_t g_serving / (N_0 + sum over other base stations of P_t g).
LinearSinr compute_sinr(const Deployment& deployment, std::size_t user);

/// Uniformly samples `count` users served by `bs` with a stream derived from
/// (seed, drop_index, bs). Empty when the base station serves fewer users.
std::optional<UserPool> select_pool(const Deployment& deployment, std::size_t bs,
                                    std::size_t count, std::uint64_t seed);

/// Writes `drop,user_id,bs_id,gain_db,serving` rows, one per link.
void write_gain_dump(const Deployment& deployment, std::ostream& out);

/// Seed of an independent random stream for a (seed, drop, purpose) triple.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t drop_index, std::uint64_t purpose,
                          std::uint64_t salt = 0) noexcept;

}  // namespace noma
