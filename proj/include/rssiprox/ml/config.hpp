#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rssiprox::ml {

enum class Algorithm { lr, knn, rf, svm, dt };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::lr, Algorithm::knn, Algorithm::rf,
                                               Algorithm::svm, Algorithm::dt};

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);

struct LrParams {
    double learning_rate = 0.1;
    int iterations = 1000;

    bool operator==(const LrParams&) const = default;
};

struct KnnParams {
    int k = 5;

    bool operator==(const KnnParams&) const = default;
};

struct TreeParams {
    std::size_t min_samples_split = 2;
    std::optional<int> max_depth;            ///< unlimited when empty
    std::optional<std::size_t> max_features; ///< all features when empty

    bool operator==(const TreeParams&) const = default;
};

struct ForestParams {
    int n_trees = 100;
    std::optional<std::size_t> max_features; ///< floor(sqrt(n_features)) when empty
    bool bootstrap = true;
    std::size_t min_samples_split = 2;
    std::optional<int> max_depth;

    bool operator==(const ForestParams&) const = default;
};

struct SvmParams {
    double c = 1.0;
    std::optional<double> gamma; ///< 1 / (n_features * var(X)) when empty
    double tol = 1e-3;
    int max_passes = 10;

    bool operator==(const SvmParams&) const = default;
};

struct TrainConfig {
    Algorithm algorithm = Algorithm::rf;
    std::uint64_t seed = 0;
    LrParams lr;
    KnnParams knn;
    TreeParams dt;
    ForestParams rf;
    SvmParams svm;

    /// Throws ConfigError on invalid hyperparameters.
    void validate() const;

    /// Hyperparameter keys ("lr.learning_rate", "rf.n_trees", ...) in a fixed
    /// order. Excludes algorithm and seed.
    std::vector<std::pair<std::string, std::string>> to_key_values() const;

    /// Returns false for unknown keys; throws ConfigError on bad values.
    bool set(std::string_view key, std::string_view value);

    bool operator==(const TrainConfig&) const = default;
};

} // namespace rssiprox::ml
