#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rssiprox/types.hpp"

namespace rssiprox {

/// Distinct values of a trace in first-occurrence order.
std::vector<int> unique_values(std::span<const int> values);

enum class TrialMatching {
    equal,  ///< both points use the same trial index
    random, ///< each point draws its trial independently
};

std::string_view to_string(TrialMatching m);
TrialMatching parse_trial_matching(std::string_view text);

struct PairingConfig {
    std::size_t n_positive = 100;
    std::size_t n_negative = 200;
    TrialMatching matching = TrialMatching::equal;
};

/// Builds the labeled pair dataset.
///
/// A sample is a point pair plus a trial assignment. Pairs are visited in
/// seeded random rounds; each visit draws a trial assignment the pair has not
/// used yet, so point pairs repeat with different trials once the distinct
/// pairs of a class run out. Samples are shuffled before returning.
///
/// Throws std::invalid_argument when a point lacks a complete trial or when
/// the requested count for a class exceeds its distinct (pair, trials)
/// combinations.
Dataset build_pairs(std::span<const PointRecord> points, const PairingConfig& config,
                    std::uint64_t seed);

} // namespace rssiprox
