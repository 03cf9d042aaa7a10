#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rssiprox/rng.hpp"
#include "rssiprox/types.hpp"

namespace rssiprox {

inline constexpr double kFeetToMeters = 0.3048;
inline constexpr int kRssiFloorDbm = -100;
inline constexpr int kRssiCeilingDbm = 0;

struct RoomSize {
    double width_ft = 0.0;
    double depth_ft = 0.0;
};

/// Two rooms split by the x = 0 wall; the right room holds the APs.
struct SimConfig {
    std::vector<Point> ap_positions{{0.0, 0.0}, {0.0, 21.0}, {32.0, 0.0}};
    RoomSize room_right{35.0, 25.0};
    RoomSize room_left{33.0, 25.0};
    int devices_per_room = 10;
    int trials = 10;
    int samples_per_trial = 8;
    double interval_s = 4.0;
    double gamma = 2.5;          ///< path-loss exponent
    double pl0_dbm = -40.0;      ///< received power at d0
    double d0_m = 1.0;
    double wall_loss_db = 5.0;   ///< per wall crossing
    double noise_sigma_db = 4.0; ///< log-normal shadowing
    std::uint64_t seed = 0;

    /// Throws ConfigError on out-of-range values.
    void validate() const;

    /// Flat key=value view, in a fixed order. Excludes the seed.
    std::vector<std::pair<std::string, std::string>> to_key_values() const;

    /// Sets one key from its text form. Returns false for unknown keys and
    /// throws ConfigError for unparsable values.
    bool set(std::string_view key, std::string_view value);
};

/// Log-distance loss beyond the reference point: 10 * gamma * log10(d / d0).
/// Distances below d0 clamp to d0. Throws std::invalid_argument if d0 <= 0.
double path_loss_db(double d_m, double gamma, double d0_m);

/// Number of walls between a device and an AP. APs on the partition count
/// as right-room.
int walls_between(Point device, Point ap);

/// One integer RSSI draw for a device/AP geometry, clamped to [-100, 0].
int sample_rssi(Point device_ft, Point ap_ft, const SimConfig& cfg, Rng& rng);

/// Seeded device layout: left-room points first, then right-room points.
std::vector<Point> place_devices(const SimConfig& cfg);

/// Simulates the full collection campaign. Every (point, ap, trial) trace
/// draws from its own stream derived from (seed, point index, ap, trial).
std::vector<PointRecord> generate(const SimConfig& cfg);

} // namespace rssiprox
