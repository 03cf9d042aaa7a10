#pragma once

#include <span>
#include <vector>

#include "rssiprox/ml/config.hpp"
#include "rssiprox/ml/matrix.hpp"

namespace rssiprox::ml {

struct LogisticModel {
    std::vector<double> weights;
    double bias = 0.0;

    double probability(std::span<const double> x) const;
    /// Label 1 when the probability is >= 0.5.
    int predict_one(std::span<const double> x) const;

    bool operator==(const LogisticModel&) const = default;
};

struct LogisticFit {
    LogisticModel model;
    /// Mean cross-entropy before each step and after the last (iterations + 1 values).
    std::vector<double> loss_history;
};

/// Full-batch gradient descent from zero weights, no regularization.
LogisticFit fit_logistic(const Matrix& x, const Labels& y, const LrParams& params);

/// Mean cross-entropy of the model on (x, y), evaluated in log-sigmoid form.
double cross_entropy(const LogisticModel& model, const Matrix& x, const Labels& y);

} // namespace rssiprox::ml
