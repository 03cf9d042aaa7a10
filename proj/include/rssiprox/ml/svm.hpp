#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rssiprox/ml/config.hpp"
#include "rssiprox/ml/matrix.hpp"

namespace rssiprox::ml {

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

/// sklearn-style "scale" gamma: 1 / (n_features * population variance of all
/// entries). Falls back to 1 when the variance is zero.
double scale_gamma(const Matrix& x);

struct SvmModel {
    Matrix support_vectors;
    std::vector<double> dual_coef; ///< alpha_i * y_i with y in {-1, +1}
    double bias = 0.0;
    double gamma = 1.0;

    double decision(std::span<const double> x) const;
    /// Label 1 iff the decision value is strictly positive.
    int predict_one(std::span<const double> x) const;

    bool operator==(const SvmModel&) const = default;
};

struct SvmFit {
    SvmModel model;
    std::vector<double> alphas; ///< one per training row, each in [0, C]
    int sweeps = 0;
};

/// Simplified SMO: sweep all rows, pair each KKT violator with a random
/// partner, stop after max_passes consecutive sweeps without an update.
SvmFit fit_svm(const Matrix& x, const Labels& y, const SvmParams& params, std::uint64_t seed);

} // namespace rssiprox::ml
