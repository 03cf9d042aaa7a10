#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "rssiprox/types.hpp"

namespace rssiprox {

/// "High" signal threshold: readings at or below this count toward rssi_high.
inline constexpr int kHighThresholdDbm = -50;
/// "Average" signal threshold: readings at or below this count toward rssi_avg.
inline constexpr int kAvgThresholdDbm = -70;

// Pairwise features over the unique-value sequences U and V of one access
// point. Each throws std::invalid_argument when either input is empty.
// Statistical features work on absolute dBm magnitudes; the ratio features
// work on the deduplicated set union of U and V.

/// |mean(|U|) - mean(|V|)|
double mean_difference(std::span<const int> u, std::span<const int> v);
/// Mean magnitude over the union.
double mean_strength(std::span<const int> u, std::span<const int> v);
/// Smallest magnitude over the union, i.e. the strongest reading.
double min_strength(std::span<const int> u, std::span<const int> v);
/// Fraction of the union at or below -50 dBm.
double high_strength_ratio(std::span<const int> u, std::span<const int> v);
/// Fraction of the union at or below -70 dBm.
double avg_strength_ratio(std::span<const int> u, std::span<const int> v);
/// DTW distance between the ordered sequences.
double signal_similarity(std::span<const int> u, std::span<const int> v);

struct ApFeatures {
    double md = 0.0;
    double s_avg = 0.0;
    double s_min = 0.0;
    double rssi_high = 0.0;
    double rssi_avg = 0.0;
    double dtw = 0.0;

    bool operator==(const ApFeatures&) const = default;
};

ApFeatures ap_features(std::span<const int> u, std::span<const int> v);

struct PairFeatures {
    std::array<ApFeatures, kNumAps> per_ap{};

    FeatureVector to_vector() const;
};

/// Features for a pair of points observed at the given trials.
/// Throws std::invalid_argument if either point lacks a trace for some AP.
PairFeatures featurize_pair(const PointRecord& a, int trial_a, const PointRecord& b, int trial_b);

/// Column names in feature-vector order: md_1, savg_1, ..., dtw_3.
const std::array<std::string_view, kNumFeatures>& feature_names();

} // namespace rssiprox
