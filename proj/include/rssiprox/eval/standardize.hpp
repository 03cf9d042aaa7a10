#pragma once

#include <vector>

#include "rssiprox/ml/matrix.hpp"

namespace rssiprox::eval {

/// Per-column affine map to zero mean and unit (population) variance.
/// Zero-variance columns map to all zeros.
struct Standardizer {
    std::vector<double> means;
    std::vector<double> stds;

    ml::Matrix apply(const ml::Matrix& x) const;

    bool operator==(const Standardizer&) const = default;
};

/// Throws std::invalid_argument for fewer than two rows or non-finite input.
Standardizer standardize_fit(const ml::Matrix& x_train);

ml::Matrix standardize_apply(const Standardizer& s, const ml::Matrix& x);

} // namespace rssiprox::eval
