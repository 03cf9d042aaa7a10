#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rssiprox/ml/config.hpp"
#include "rssiprox/ml/matrix.hpp"
#include "rssiprox/rng.hpp"

namespace rssiprox::ml {

/// Gini impurity 1 - p0^2 - p1^2. Throws std::invalid_argument on empty input.
double gini(std::span<const int> labels);
double gini(std::size_t n0, std::size_t n1);

struct TreeNode {
    int feature = -1; ///< -1 marks a leaf
    double threshold = 0.0; ///< rows with x[feature] <= threshold go left
    int left = -1;
    int right = -1;
    int label = 0;
    std::array<std::size_t, 2> counts{}; ///< training rows per class reaching the node
    double impurity = 0.0;

    bool is_leaf() const noexcept { return feature < 0; }
    std::size_t n_samples() const noexcept { return counts[0] + counts[1]; }

    bool operator==(const TreeNode&) const = default;
};

/// Binary CART classification tree; nodes[0] is the root.
struct DecisionTree {
    std::vector<TreeNode> nodes;
    std::size_t n_features = 0;

    int predict_one(std::span<const double> x) const;
    /// Number of edges on the longest root-to-leaf path.
    int depth() const;
    /// Per-feature sum over internal nodes of the sample-weighted Gini
    /// decrease, divided by the root sample count. Not normalized.
    std::vector<double> impurity_decrease() const;

    bool operator==(const DecisionTree&) const = default;
};

struct GrowParams {
    std::size_t min_samples_split = 2;
    std::optional<int> max_depth;
    std::optional<std::size_t> max_features; ///< all when empty
};

/// Grows a tree on the given rows (duplicates allowed, as in bootstrap
/// samples). Splits use midpoints between consecutive distinct values and
/// maximize the Gini decrease; ties go to the lowest feature index, then the
/// lowest threshold. A node splits whenever a valid threshold exists, even
/// at zero gain, unless it is pure, smaller than min_samples_split, or at
/// max_depth. With max_features set, features are visited in a random order
/// until that many non-constant ones have been scored.
DecisionTree grow_tree(const Matrix& x, const Labels& y, std::span<const std::size_t> rows,
                       const GrowParams& params, Rng& rng);

DecisionTree fit_tree(const Matrix& x, const Labels& y, const TreeParams& params, std::uint64_t seed);

} // namespace rssiprox::ml
