#include "noma/network.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "noma/format.hpp"

namespace noma {
namespace {

enum StreamPurpose : std::uint64_t {
    kDropStream = 1,
    kPoolStream = 2,
};

constexpr double kThermalNoiseDbmPerHz = -174.0;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid radio config: ") + what);
}

void associate(Deployment& d) {
    const std::size_t nb = d.bs_count();
    d.serving.resize(d.user_count());
    d.sinr.clear();
    d.sinr.reserve(d.user_count());
    for (std::size_t u = 0; u < d.user_count(); ++u) {
        const double* row = d.gains.data() + u * nb;
        // Every BS sees the same noise-plus-total-power denominator, so the
        // best SINR is the best gain.
        d.serving[u] = static_cast<std::size_t>(std::max_element(row, row + nb) - row);
        d.sinr.push_back(compute_sinr(d, u));
    }
}

}  // namespace

std::string_view to_string(PathlossModel model) noexcept {
    switch (model) {
        case PathlossModel::kUmaNlos: return "uma_nlos";
        case PathlossModel::kFreeSpace: return "free_space";
    }
    return "unknown";
}

std::string_view to_string(FadingModel model) noexcept {
    switch (model) {
        case FadingModel::kRayleigh: return "rayleigh";
        case FadingModel::kNone: return "none";
    }
    return "unknown";
}

PathlossModel pathloss_model_from_string(std::string_view name) {
    if (name == "uma_nlos") return PathlossModel::kUmaNlos;
    if (name == "free_space") return PathlossModel::kFreeSpace;
    throw std::invalid_argument("unknown pathloss model '" + std::string(name) + "'");
}

FadingModel fading_model_from_string(std::string_view name) {
    if (name == "rayleigh") return FadingModel::kRayleigh;
    if (name == "none") return FadingModel::kNone;
    throw std::invalid_argument("unknown fading model '" + std::string(name) + "'");
}

double RadioConfig::noise_power_dbm() const noexcept {
    return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_mhz * 1e6) + noise_figure_db;
}

void RadioConfig::validate() const {
    require(bs_density_per_km2 > 0.0, "bs_density_per_km2 must be > 0");
    require(user_density_per_km2 > 0.0,
            "user_density_per_km2 must be > 0 (no users to select pools from)");
    require(region_side_km > 0.0, "region_side_km must be > 0");
    require(bs_density_per_km2 * region_side_km * region_side_km >= 1.0,
            "region too small: expected base station count below 1");
    require(measure_inner_fraction > 0.0 && measure_inner_fraction <= 1.0,
            "measure_inner_fraction must lie in (0, 1]");
    require(std::isfinite(tx_power_dbm), "tx_power_dbm must be finite");
    require(bandwidth_mhz > 0.0, "bandwidth_mhz must be > 0");
    require(std::isfinite(noise_figure_db), "noise_figure_db must be finite");
    require(carrier_frequency_ghz > 0.0, "carrier_frequency_ghz must be > 0");
    require(bs_height_m >= 0.0 && ut_height_m >= 0.0, "antenna heights must be >= 0");
    require(min_distance_m > 0.0, "min_distance_m must be > 0");
    require(shadowing_sigma_db >= 0.0, "shadowing_sigma_db must be >= 0");
    require(users_per_bs >= 1, "users_per_bs must be >= 1");
}

double pathloss_db(const RadioConfig& config, double distance_3d_m) {
    const double d = std::max(distance_3d_m, config.min_distance_m);
    const double fc = config.carrier_frequency_ghz;
    switch (config.pathloss) {
        case PathlossModel::kUmaNlos:
            return 13.54 + 39.08 * std::log10(d) + 20.0 * std::log10(fc) -
                   0.6 * (config.ut_height_m - 1.5);
        case PathlossModel::kFreeSpace:
            return 32.45 + 20.0 * std::log10(fc) + 20.0 * std::log10(d);
    }
    throw std::logic_error("unhandled pathloss model");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t drop_index, std::uint64_t purpose,
                          std::uint64_t salt) noexcept {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ drop_index);
    h = splitmix64(h ^ purpose);
    return splitmix64(h ^ salt);
}

Deployment Deployment::from_gains(std::size_t users, std::size_t base_stations,
                                  std::vector<double> gains, double tx_power_mw,
                                  double noise_mw) {
    if (base_stations == 0) throw std::invalid_argument("deployment needs a base station");
    if (gains.size() != users * base_stations) {
        throw std::invalid_argument("gain matrix has the wrong size");
    }
    for (double g : gains) {
        if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("gains must be > 0");
    }
    Deployment d;
    d.base_stations.assign(base_stations, Position{});
    d.users.assign(users, Position{});
    d.measured.assign(base_stations, true);
    d.gains = std::move(gains);
    d.tx_power_mw = tx_power_mw;
    d.noise_mw = noise_mw;
    associate(d);
    return d;
}

std::vector<std::size_t> Deployment::users_of(std::size_t bs) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < serving.size(); ++u) {
        if (serving[u] == bs) out.push_back(u);
    }
    return out;
}

Deployment generate_drop(const RadioConfig& config, std::uint64_t drop_index) {
    config.validate();

    const double side_m = config.region_side_km * 1000.0;
    const double area_km2 = config.region_side_km * config.region_side_km;
    const double inner_lo = side_m * (1.0 - config.measure_inner_fraction) / 2.0;
    const double inner_hi = side_m - inner_lo;
    const double height_gap = config.bs_height_m - config.ut_height_m;

    Deployment d;
    d.drop_index = drop_index;
    d.tx_power_mw = db_to_linear(config.tx_power_dbm);
    d.noise_mw = db_to_linear(config.noise_power_dbm());

    std::mt19937_64 rng;
    std::size_t bs_count = 0;
    std::size_t user_count = 0;
    for (std::uint64_t attempt = 0;; ++attempt) {
        rng.seed(derive_seed(config.seed, drop_index, kDropStream, attempt));
        std::poisson_distribution<std::uint64_t> bs_draw(config.bs_density_per_km2 * area_km2);
        std::poisson_distribution<std::uint64_t> user_draw(config.user_density_per_km2 * area_km2);
        bs_count = static_cast<std::size_t>(bs_draw(rng));
        user_count = static_cast<std::size_t>(user_draw(rng));
        if (bs_count > 0) break;
        ++d.regenerations;
    }

    std::uniform_real_distribution<double> coord(0.0, side_m);
    d.base_stations.resize(bs_count);
    d.measured.resize(bs_count);
    for (std::size_t b = 0; b < bs_count; ++b) {
        Position& p = d.base_stations[b];
        p.x_m = coord(rng);
        p.y_m = coord(rng);
        d.measured[b] = p.x_m >= inner_lo && p.x_m < inner_hi && p.y_m >= inner_lo &&
                        p.y_m < inner_hi;
    }
    d.users.resize(user_count);
    for (Position& p : d.users) {
        p.x_m = coord(rng);
        p.y_m = coord(rng);
    }

    std::normal_distribution<double> shadow(0.0, config.shadowing_sigma_db);
    std::exponential_distribution<double> fade(1.0);
    d.gains.resize(user_count * bs_count);
    for (std::size_t u = 0; u < user_count; ++u) {
        for (std::size_t b = 0; b < bs_count; ++b) {
            const double dx = d.users[u].x_m - d.base_stations[b].x_m;
            const double dy = d.users[u].y_m - d.base_stations[b].y_m;
            const double d2 = std::max(std::hypot(dx, dy), config.min_distance_m);
            const double loss_db = pathloss_db(config, std::hypot(d2, height_gap));
            const double shadow_db = config.shadowing_sigma_db > 0.0 ? shadow(rng) : 0.0;
            double fading = 1.0;
            if (config.fading == FadingModel::kRayleigh) {
                do {
                    fading = fade(rng);
                } while (!(fading > 0.0));
            }
            const double g = db_to_linear(-(loss_db + shadow_db)) * fading;
            d.gains[u * bs_count + b] = std::max(g, std::numeric_limits<double>::min());
        }
    }

    associate(d);
    return d;
}

LinearSinr compute_sinr(const Deployment& d, std::size_t user) {
    if (user >= d.user_count()) throw std::out_of_range("user index out of range");
    const std::size_t serving = d.serving.at(user);
    double interference = 0.0;
    for (std::size_t b = 0; b < d.bs_count(); ++b) {
        if (b != serving) interference += d.tx_power_mw * d.gain(user, b);
    }
    return LinearSinr(d.tx_power_mw * d.gain(user, serving) / (d.noise_mw + interference));
}

std::optional<UserPool> select_pool(const Deployment& d, std::size_t bs, std::size_t count,
                                    std::uint64_t seed) {
    if (bs >= d.bs_count()) throw std::out_of_range("base station index out of range");
    if (count == 0) throw std::invalid_argument("pool size must be >= 1");
    const std::vector<std::size_t> candidates = d.users_of(bs);
    if (candidates.size() < count) return std::nullopt;

    std::vector<std::size_t> picked;
    picked.reserve(count);
    std::mt19937_64 rng(derive_seed(seed, d.drop_index, kPoolStream, bs));
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(picked), count, rng);

    std::vector<Member> members;
    members.reserve(count);
    for (std::size_t u : picked) {
        members.push_back(Member{UserId{static_cast<std::uint32_t>(u)}, d.sinr[u]});
    }
    return UserPool(std::move(members));
}

void write_gain_dump(const Deployment& d, std::ostream& out) {
    out << "drop,user_id,bs_id,gain_db,serving\n";
    for (std::size_t u = 0; u < d.user_count(); ++u) {
        for (std::size_t b = 0; b < d.bs_count(); ++b) {
            out << d.drop_index << ',' << u << ',' << b << ','
                << format_double(10.0 * std::log10(d.gain(u, b))) << ','
                << (d.serving[u] == b ? 1 : 0) << '\n';
        }
    }
}

}  // namespace noma
