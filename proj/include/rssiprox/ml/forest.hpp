#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rssiprox/ml/config.hpp"
#include "rssiprox/ml/tree.hpp"

namespace rssiprox::ml {

struct RandomForest {
    std::vector<DecisionTree> trees;
    std::vector<std::uint64_t> tree_seeds;

    /// Majority vote; an even split goes to class 0.
    int predict_one(std::span<const double> x) const;

    bool operator==(const RandomForest&) const = default;
};

/// Tree t is grown from its own stream seeded by mix_seed(seed, t), which
/// drives both its bootstrap draw and its per-node feature sampling.
RandomForest fit_forest(const Matrix& x, const Labels& y, const ForestParams& params, std::uint64_t seed);

/// Mean decrease in impurity: each tree's decreases normalized to sum 1,
/// averaged over trees, renormalized. Trees without any positive decrease
/// are skipped; if none remain the result is all zeros.
std::vector<double> mdi_importance(const RandomForest& forest);

} // namespace rssiprox::ml
