#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

namespace rssiprox {

inline constexpr int kNumAps = 3;
inline constexpr int kFeaturesPerAp = 6;
inline constexpr std::size_t kNumFeatures = kNumAps * kFeaturesPerAp;

/// Device or access-point location in feet. The sign of x encodes the room.
struct Point {
    double x = 0.0;
    double y = 0.0;

    auto operator<=>(const Point&) const = default;
};

enum class Room { left, right };

/// Room of a device point: left iff x < 0, right iff x > 0. Throws on x == 0.
Room room_of(Point p);

std::string_view to_string(Room room);

struct RssiReading {
    Point point;
    int ap_id = 1;
    int trial = 0;
    int seq = 0;
    int rssi_dbm = 0;
};

struct TraceKey {
    int ap_id = 1;
    int trial = 0;

    auto operator<=>(const TraceKey&) const = default;
};

/// RSSI sequence for one (point, ap, trial), ordered by sample index.
struct Trace {
    Point point;
    int ap_id = 1;
    int trial = 0;
    std::vector<int> values;

    bool operator==(const Trace&) const = default;
};

struct PointRecord {
    Point point;
    Room room = Room::right;
    std::map<TraceKey, Trace> traces;

    const Trace* find(int ap_id, int trial) const;

    /// Trials that carry a trace for every access point, ascending.
    std::vector<int> complete_trials() const;

    bool operator==(const PointRecord&) const = default;
};

/// Feature layout: for ap in 1..3, [md, s_avg, s_min, rssi_high, rssi_avg, dtw].
using FeatureVector = std::array<double, kNumFeatures>;

struct PairSample {
    Point point_a;
    Point point_b;
    int trial_a = 0;
    int trial_b = 0;
    FeatureVector features{};
    int label = 0; ///< 1 = adjacent (same room), 0 = distant

    bool operator==(const PairSample&) const = default;
};

struct Dataset {
    std::vector<PairSample> samples;
    std::size_t n_positive = 0;
    std::size_t n_negative = 0;

    bool operator==(const Dataset&) const = default;
};

} // namespace rssiprox
