#pragma once

#include <span>

#include "rssiprox/ml/matrix.hpp"

namespace rssiprox::ml {

/// Majority vote among the k nearest training rows (Euclidean). Distance
/// ties at the k-th neighbour go to the lower training-row index; a tied
/// vote (only possible when k exceeds an even training size) yields 0.
struct KnnModel {
    int k = 5;
    Matrix train_x;
    Labels train_y;

    int predict_one(std::span<const double> x) const;

    bool operator==(const KnnModel&) const = default;
};

KnnModel fit_knn(const Matrix& x, const Labels& y, int k);

} // namespace rssiprox::ml
