#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rssiprox/eval/metrics.hpp"
#include "rssiprox/eval/split.hpp"
#include "rssiprox/eval/standardize.hpp"
#include "rssiprox/ml/model.hpp"
#include "rssiprox/types.hpp"

namespace rssiprox::eval {

struct EvalOptions {
    double train_fraction = 0.75;
    std::size_t cv_folds = 10;
};

struct EvalReport {
    ml::Algorithm algorithm = ml::Algorithm::rf;
    std::uint64_t seed = 0;
    ConfusionMatrix confusion;
    double accuracy = 0.0;
    double f1_class0 = 0.0;
    double f1_class1 = 0.0;
    std::vector<double> cv_accuracies;
    std::optional<std::vector<double>> importance;
};

/// Standardizer and model fitted on the training side of the holdout split.
struct TrainedModel {
    Standardizer standardizer;
    ml::Model model;
};

/// Holdout split (seeded by stage "split" of `seed`), standardizer fitted on
/// the training rows only, then the model trained on standardized rows.
TrainedModel fit_holdout(const ml::Matrix& x, const ml::Labels& y, const ml::TrainConfig& config,
                         std::uint64_t seed, const EvalOptions& options = {});

/// Scores a trained model on the test side of the same holdout split and
/// runs k-fold CV (seeded by stage "cv") inside the training side, each fold
/// refitting its own standardizer and a model with the same configuration.
/// Random forests also get MDI importances.
EvalReport score_holdout(const TrainedModel& trained, const ml::Matrix& x, const ml::Labels& y,
                         std::uint64_t seed, const EvalOptions& options = {});

/// fit_holdout followed by score_holdout.
EvalReport evaluate(const ml::Matrix& x, const ml::Labels& y, const ml::TrainConfig& config, std::uint64_t seed,
                    const EvalOptions& options = {});

EvalReport evaluate(const Dataset& dataset, const ml::TrainConfig& config, std::uint64_t seed,
                    const EvalOptions& options = {});

/// Feature matrix and labels of a dataset in sample order.
std::pair<ml::Matrix, ml::Labels> to_matrix(const Dataset& dataset);

/// {algorithm, seed, confusion:{tp,fp,fn,tn}, accuracy, f1:{class0,class1},
///  cv_accuracies, importance | null}, plus "config" when given.
nlohmann::ordered_json report_to_json(const EvalReport& report,
                                      const std::vector<std::pair<std::string, std::string>>& config = {});

nlohmann::json trained_to_json(const TrainedModel& trained);
TrainedModel trained_from_json(const nlohmann::json& doc);

/// Class-conditional density curve of one feature.
struct KdeCurve {
    std::size_t feature = 0;
    int label = 0;
    std::vector<double> grid;
    std::vector<double> density;
};

/// Grid shared by both classes of a feature: from min - 5h to max + 5h,
/// h being the larger of the two class bandwidths.
std::vector<double> class_grid(const ml::Matrix& x, const ml::Labels& y, std::size_t feature,
                               std::size_t points = 512);

/// One curve per (feature, class) with nonzero spread, features ascending,
/// class 0 before class 1.
std::vector<KdeCurve> kde_curves(const ml::Matrix& x, const ml::Labels& y, std::size_t points = 512);

/// Overlap coefficient between the class-0 and class-1 densities of a
/// feature. Throws DegenerateSample if either class has zero spread.
double class_overlap(const ml::Matrix& x, const ml::Labels& y, std::size_t feature, std::size_t points = 512);

} // namespace rssiprox::eval
