#include "rssiprox/eval/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

#include "rssiprox/common.hpp"
#include "rssiprox/eval/kde.hpp"
#include "rssiprox/rng.hpp"

namespace rssiprox::eval {

namespace {

std::vector<double> column_for_class(const ml::Matrix& x, const ml::Labels& y, std::size_t feature, int label) {
    std::vector<double> out;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        if (y[r] == label) out.push_back(x(r, feature));
    }
    return out;
}

double bandwidth_or_zero(std::span<const double> values) {
    try {
        return silverman_bandwidth(values);
    } catch (const std::invalid_argument&) {
        return 0.0;
    }
}

} // namespace

TrainedModel fit_holdout(const ml::Matrix& x, const ml::Labels& y, const ml::TrainConfig& config,
                         std::uint64_t seed, const EvalOptions& options) {
    ml::check_training_set(x, y, false);
    const SplitIndices split = stratified_split(y, options.train_fraction, stage_seed(seed, "split"));
    const ml::Matrix x_train = x.select_rows(split.train);
    const Standardizer standardizer = standardize_fit(x_train);
    ml::Model model = ml::train(standardizer.apply(x_train), ml::select(y, split.train), config);
    return TrainedModel{standardizer, std::move(model)};
}

EvalReport score_holdout(const TrainedModel& trained, const ml::Matrix& x, const ml::Labels& y,
                         std::uint64_t seed, const EvalOptions& options) {
    ml::check_training_set(x, y, false);
    const SplitIndices split = stratified_split(y, options.train_fraction, stage_seed(seed, "split"));
    const ml::Matrix x_test = trained.standardizer.apply(x.select_rows(split.test));
    const ml::Labels y_test = ml::select(y, split.test);

    EvalReport report;
    report.algorithm = trained.model.algorithm();
    report.seed = seed;
    report.confusion = confusion(y_test, ml::predict(trained.model, x_test));
    report.accuracy = accuracy(report.confusion);
    report.f1_class0 = f1(report.confusion, 0);
    report.f1_class1 = f1(report.confusion, 1);

    const ml::Matrix x_train = x.select_rows(split.train);
    const ml::Labels y_train = ml::select(y, split.train);
    for (const Fold& fold : kfold(y_train, options.cv_folds, stage_seed(seed, "cv"))) {
        const ml::Matrix fold_x = x_train.select_rows(fold.train);
        const Standardizer s = standardize_fit(fold_x);
        const ml::Model m = ml::train(s.apply(fold_x), ml::select(y_train, fold.train), trained.model.config());
        const ml::Labels predicted = ml::predict(m, s.apply(x_train.select_rows(fold.validation)));
        report.cv_accuracies.push_back(accuracy(confusion(ml::select(y_train, fold.validation), predicted)));
    }

    if (trained.model.algorithm() == ml::Algorithm::rf) {
        report.importance = ml::mdi_importance(trained.model);
    }
    return report;
}

EvalReport evaluate(const ml::Matrix& x, const ml::Labels& y, const ml::TrainConfig& config, std::uint64_t seed,
                    const EvalOptions& options) {
    return score_holdout(fit_holdout(x, y, config, seed, options), x, y, seed, options);
}

std::pair<ml::Matrix, ml::Labels> to_matrix(const Dataset& dataset) {
    ml::Matrix x(dataset.samples.size(), kNumFeatures);
    ml::Labels y;
    y.reserve(dataset.samples.size());
    for (std::size_t r = 0; r < dataset.samples.size(); ++r) {
        const auto& s = dataset.samples[r];
        std::copy(s.features.begin(), s.features.end(), x.row(r).begin());
        y.push_back(s.label);
    }
    return {std::move(x), std::move(y)};
}

EvalReport evaluate(const Dataset& dataset, const ml::TrainConfig& config, std::uint64_t seed,
                    const EvalOptions& options) {
    const auto [x, y] = to_matrix(dataset);
    return evaluate(x, y, config, seed, options);
}

nlohmann::ordered_json report_to_json(const EvalReport& r,
                                      const std::vector<std::pair<std::string, std::string>>& config) {
    nlohmann::ordered_json j;
    j["algorithm"] = std::string(ml::to_string(r.algorithm));
    j["seed"] = r.seed;
    j["confusion"] = {{"tp", r.confusion.tp}, {"fp", r.confusion.fp}, {"fn", r.confusion.fn}, {"tn", r.confusion.tn}};
    j["accuracy"] = r.accuracy;
    j["f1"] = {{"class0", r.f1_class0}, {"class1", r.f1_class1}};
    j["cv_accuracies"] = r.cv_accuracies;
    j["importance"] = r.importance ? nlohmann::ordered_json(*r.importance) : nlohmann::ordered_json(nullptr);
    if (!config.empty()) {
        nlohmann::ordered_json c = nlohmann::ordered_json::object();
        for (const auto& [k, v] : config) c[k] = v;
        j["config"] = std::move(c);
    }
    return j;
}

nlohmann::json trained_to_json(const TrainedModel& trained) {
    nlohmann::json doc = ml::to_json(trained.model);
    doc["standardizer"] = {{"means", trained.standardizer.means}, {"stds", trained.standardizer.stds}};
    return doc;
}

TrainedModel trained_from_json(const nlohmann::json& doc) {
    ml::Model model = ml::model_from_json(doc);
    Standardizer s;
    try {
        s.means = doc.at("standardizer").at("means").get<std::vector<double>>();
        s.stds = doc.at("standardizer").at("stds").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("model: ") + e.what());
    }
    if (s.means.size() != model.n_features() || s.stds.size() != model.n_features()) {
        throw InputError("model: standardizer does not match feature count");
    }
    return TrainedModel{std::move(s), std::move(model)};
}

std::vector<double> class_grid(const ml::Matrix& x, const ml::Labels& y, std::size_t feature, std::size_t points) {
    double lo = x(0, feature);
    double hi = lo;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        lo = std::min(lo, x(r, feature));
        hi = std::max(hi, x(r, feature));
    }
    const double h = std::max(bandwidth_or_zero(column_for_class(x, y, feature, 0)),
                              bandwidth_or_zero(column_for_class(x, y, feature, 1)));
    const double pad = h > 0.0 ? 5.0 * h : 1.0;
    return linspace(lo - pad, hi + pad, points);
}

std::vector<KdeCurve> kde_curves(const ml::Matrix& x, const ml::Labels& y, std::size_t points) {
    std::vector<KdeCurve> out;
    if (x.rows() == 0) return out;
    for (std::size_t f = 0; f < x.cols(); ++f) {
        const auto grid = class_grid(x, y, f, points);
        for (int label : {0, 1}) {
            const auto values = column_for_class(x, y, f, label);
            const double h = bandwidth_or_zero(values);
            if (h == 0.0) continue;
            out.push_back(KdeCurve{f, label, grid, kde(values, grid, h)});
        }
    }
    return out;
}

double class_overlap(const ml::Matrix& x, const ml::Labels& y, std::size_t feature, std::size_t points) {
    const auto grid = class_grid(x, y, feature, points);
    const auto f0 = kde(column_for_class(x, y, feature, 0), grid);
    const auto f1v = kde(column_for_class(x, y, feature, 1), grid);
    return overlap_coefficient(grid, f0, f1v);
}

} // namespace rssiprox::eval
