#pragma once

#include <cstddef>

#include "rssiprox/ml/matrix.hpp"

namespace rssiprox::eval {

/// Binary confusion matrix with class 1 as the positive class.
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    std::size_t total() const noexcept { return tp + fp + fn + tn; }

    /// Same matrix with class 0 treated as positive.
    ConfusionMatrix swapped() const noexcept { return {tn, fn, fp, tp}; }

    bool operator==(const ConfusionMatrix&) const = default;
};

/// Throws std::invalid_argument on length mismatch or non-binary labels.
ConfusionMatrix confusion(const ml::Labels& truth, const ml::Labels& predicted);

/// (tp + tn) / total. Throws std::invalid_argument for an empty matrix.
double accuracy(const ConfusionMatrix& cm);

/// Harmonic mean of precision and recall for the chosen class, computed as
/// 2tp / (2tp + fp + fn). Zero when both precision and recall are zero.
/// Throws std::invalid_argument when the class never occurs in truth or predictions.
double f1(const ConfusionMatrix& cm, int positive_class);

} // namespace rssiprox::eval
