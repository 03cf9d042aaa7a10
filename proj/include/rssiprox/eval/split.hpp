#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rssiprox/ml/matrix.hpp"

namespace rssiprox::eval {

struct SplitIndices {
    std::vector<std::size_t> train; ///< ascending
    std::vector<std::size_t> test;  ///< ascending

    bool operator==(const SplitIndices&) const = default;
};

/// Stratified holdout split. Each class contributes round(n_c * (1 - train_fraction))
/// rows to the test side, clamped so both sides keep at least one row per
/// class. Throws std::invalid_argument if a class has fewer than 2 rows or
/// train_fraction is outside (0, 1).
SplitIndices stratified_split(const ml::Labels& labels, double train_fraction, std::uint64_t seed);

struct Fold {
    std::vector<std::size_t> train;      ///< ascending
    std::vector<std::size_t> validation; ///< ascending
};

/// Stratified k-fold: each class is shuffled, the classes are concatenated,
/// and position p is dealt to fold p mod k. Fold sizes differ by at most one
/// and every class is spread across folds within one sample.
/// Throws std::invalid_argument when k < 2 or n < k.
std::vector<Fold> kfold(const ml::Labels& labels, std::size_t k, std::uint64_t seed);

} // namespace rssiprox::eval
