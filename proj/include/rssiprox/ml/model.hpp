#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "json.hpp"

#include "rssiprox/ml/config.hpp"
#include "rssiprox/ml/forest.hpp"
#include "rssiprox/ml/knn.hpp"
#include "rssiprox/ml/logistic.hpp"
#include "rssiprox/ml/matrix.hpp"
#include "rssiprox/ml/svm.hpp"
#include "rssiprox/ml/tree.hpp"

namespace rssiprox::ml {

inline constexpr int kModelFormatVersion = 1;

/// A trained binary classifier. Immutable; prediction is read-only.
class Model {
public:
    using Params = std::variant<LogisticModel, KnnModel, DecisionTree, RandomForest, SvmModel>;

    Model(TrainConfig config, std::size_t n_features, Params params);

    Algorithm algorithm() const noexcept { return config_.algorithm; }
    const TrainConfig& config() const noexcept { return config_; }
    std::size_t n_features() const noexcept { return n_features_; }
    const Params& params() const noexcept { return params_; }

    template <typename T>
    const T* get_if() const noexcept {
        return std::get_if<T>(&params_);
    }

    int predict_one(std::span<const double> x) const;

    bool operator==(const Model&) const = default;

private:
    TrainConfig config_;
    std::size_t n_features_ = 0;
    Params params_;
};

/// Trains the configured algorithm. Throws std::invalid_argument on shape
/// mismatch, NaN, non-binary labels, or a single class (KNN excepted), and
/// ConfigError on invalid hyperparameters.
Model train(const Matrix& x, const Labels& y, const TrainConfig& config);

/// One label per row. Throws std::invalid_argument on column mismatch.
Labels predict(const Model& model, const Matrix& x);

/// Forest feature importances; throws std::invalid_argument for non-RF models.
std::vector<double> mdi_importance(const Model& model);

/// Versioned JSON: {"format", "version", "algorithm", "n_features", "config", "params"}.
nlohmann::json to_json(const Model& model);
/// Throws InputError on a malformed or unsupported document.
Model model_from_json(const nlohmann::json& doc);

nlohmann::json config_to_json(const TrainConfig& config);
TrainConfig config_from_json(const nlohmann::json& doc);

} // namespace rssiprox::ml
