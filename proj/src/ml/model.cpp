#include "rssiprox/ml/model.hpp"

#include <stdexcept>
#include <string>

#include "rssiprox/common.hpp"

namespace rssiprox::ml {

using nlohmann::json;

namespace {

constexpr const char* kFormatName = "rssiprox-model";

json matrix_to_json(const Matrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"values", m.values()}};
}

Matrix matrix_from_json(const json& j) {
    return Matrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                  j.at("values").get<std::vector<double>>());
}

json tree_to_json(const DecisionTree& t) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
        nodes.push_back(json{{"feature", n.feature},
                             {"threshold", n.threshold},
                             {"left", n.left},
                             {"right", n.right},
                             {"label", n.label},
                             {"counts", n.counts},
                             {"impurity", n.impurity}});
    }
    return json{{"n_features", t.n_features}, {"nodes", std::move(nodes)}};
}

DecisionTree tree_from_json(const json& j) {
    DecisionTree t;
    t.n_features = j.at("n_features").get<std::size_t>();
    for (const auto& jn : j.at("nodes")) {
        TreeNode n;
        n.feature = jn.at("feature").get<int>();
        n.threshold = jn.at("threshold").get<double>();
        n.left = jn.at("left").get<int>();
        n.right = jn.at("right").get<int>();
        n.label = jn.at("label").get<int>();
        n.counts = jn.at("counts").get<std::array<std::size_t, 2>>();
        n.impurity = jn.at("impurity").get<double>();
        t.nodes.push_back(n);
    }
    const auto count = static_cast<int>(t.nodes.size());
    for (const auto& n : t.nodes) {
        if (!n.is_leaf() && (n.feature >= static_cast<int>(t.n_features) || n.left <= 0 || n.right <= 0 ||
                             n.left >= count || n.right >= count)) {
            throw InputError("model: corrupt tree node");
        }
    }
    if (t.nodes.empty()) throw InputError("model: empty tree");
    return t;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

} // namespace

Model::Model(TrainConfig config, std::size_t n_features, Params params)
    : config_(std::move(config)), n_features_(n_features), params_(std::move(params)) {}

int Model::predict_one(std::span<const double> x) const {
    return std::visit([&](const auto& m) { return m.predict_one(x); }, params_);
}

Model train(const Matrix& x, const Labels& y, const TrainConfig& config) {
    config.validate();
    switch (config.algorithm) {
    case Algorithm::lr:
        return Model(config, x.cols(), fit_logistic(x, y, config.lr).model);
    case Algorithm::knn:
        return Model(config, x.cols(), fit_knn(x, y, config.knn.k));
    case Algorithm::dt:
        return Model(config, x.cols(), fit_tree(x, y, config.dt, config.seed));
    case Algorithm::rf:
        return Model(config, x.cols(), fit_forest(x, y, config.rf, config.seed));
    case Algorithm::svm:
        return Model(config, x.cols(), fit_svm(x, y, config.svm, config.seed).model);
    }
    throw std::invalid_argument("train: unknown algorithm");
}

Labels predict(const Model& model, const Matrix& x) {
    check_columns(x, model.n_features());
    Labels out;
    out.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out.push_back(model.predict_one(x.row(i)));
    }
    return out;
}

std::vector<double> mdi_importance(const Model& model) {
    const auto* forest = model.get_if<RandomForest>();
    if (forest == nullptr) {
        throw std::invalid_argument("mdi_importance: model is not a random forest");
    }
    return mdi_importance(*forest);
}

json config_to_json(const TrainConfig& c) {
    return json{
        {"algorithm", std::string(to_string(c.algorithm))},
        {"seed", c.seed},
        {"lr", {{"learning_rate", c.lr.learning_rate}, {"iterations", c.lr.iterations}}},
        {"knn", {{"k", c.knn.k}}},
        {"dt",
         {{"min_samples_split", c.dt.min_samples_split},
          {"max_depth", optional_json(c.dt.max_depth)},
          {"max_features", optional_json(c.dt.max_features)}}},
        {"rf",
         {{"n_trees", c.rf.n_trees},
          {"max_features", optional_json(c.rf.max_features)},
          {"bootstrap", c.rf.bootstrap},
          {"min_samples_split", c.rf.min_samples_split},
          {"max_depth", optional_json(c.rf.max_depth)}}},
        {"svm",
         {{"c", c.svm.c}, {"gamma", optional_json(c.svm.gamma)}, {"tol", c.svm.tol}, {"max_passes", c.svm.max_passes}}},
    };
}

TrainConfig config_from_json(const json& j) {
    TrainConfig c;
    c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.lr.learning_rate = j.at("lr").at("learning_rate").get<double>();
    c.lr.iterations = j.at("lr").at("iterations").get<int>();
    c.knn.k = j.at("knn").at("k").get<int>();
    c.dt.min_samples_split = j.at("dt").at("min_samples_split").get<std::size_t>();
    c.dt.max_depth = optional_from<int>(j.at("dt").at("max_depth"));
    c.dt.max_features = optional_from<std::size_t>(j.at("dt").at("max_features"));
    c.rf.n_trees = j.at("rf").at("n_trees").get<int>();
    c.rf.max_features = optional_from<std::size_t>(j.at("rf").at("max_features"));
    c.rf.bootstrap = j.at("rf").at("bootstrap").get<bool>();
    c.rf.min_samples_split = j.at("rf").at("min_samples_split").get<std::size_t>();
    c.rf.max_depth = optional_from<int>(j.at("rf").at("max_depth"));
    c.svm.c = j.at("svm").at("c").get<double>();
    c.svm.gamma = optional_from<double>(j.at("svm").at("gamma"));
    c.svm.tol = j.at("svm").at("tol").get<double>();
    c.svm.max_passes = j.at("svm").at("max_passes").get<int>();
    return c;
}

json to_json(const Model& model) {
    json params = std::visit(
        [](const auto& m) -> json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LogisticModel>) {
                return json{{"weights", m.weights}, {"bias", m.bias}};
            } else if constexpr (std::is_same_v<T, KnnModel>) {
                return json{{"k", m.k}, {"train_x", matrix_to_json(m.train_x)}, {"train_y", m.train_y}};
            } else if constexpr (std::is_same_v<T, DecisionTree>) {
                return tree_to_json(m);
            } else if constexpr (std::is_same_v<T, RandomForest>) {
                json trees = json::array();
                for (const auto& t : m.trees) trees.push_back(tree_to_json(t));
                return json{{"trees", std::move(trees)}, {"tree_seeds", m.tree_seeds}};
            } else {
                return json{{"support_vectors", matrix_to_json(m.support_vectors)},
                            {"dual_coef", m.dual_coef},
                            {"bias", m.bias},
                            {"gamma", m.gamma}};
            }
        },
        model.params());
    return json{{"format", kFormatName},
                {"version", kModelFormatVersion},
                {"algorithm", std::string(to_string(model.algorithm()))},
                {"n_features", model.n_features()},
                {"config", config_to_json(model.config())},
                {"params", std::move(params)}};
}

Model model_from_json(const json& doc) {
    try {
        if (doc.at("format").get<std::string>() != kFormatName) {
            throw InputError("model: unrecognized format tag");
        }
        const int version = doc.at("version").get<int>();
        if (version != kModelFormatVersion) {
            throw InputError("model: unsupported version " + std::to_string(version));
        }
        const TrainConfig config = config_from_json(doc.at("config"));
        if (doc.at("algorithm").get<std::string>() != to_string(config.algorithm)) {
            throw InputError("model: algorithm tag disagrees with config");
        }
        const auto n_features = doc.at("n_features").get<std::size_t>();
        const json& p = doc.at("params");
        switch (config.algorithm) {
        case Algorithm::lr: {
            LogisticModel m{p.at("weights").get<std::vector<double>>(), p.at("bias").get<double>()};
            if (m.weights.size() != n_features) throw InputError("model: weight count mismatch");
            return Model(config, n_features, std::move(m));
        }
        case Algorithm::knn: {
            KnnModel m{p.at("k").get<int>(), matrix_from_json(p.at("train_x")), p.at("train_y").get<Labels>()};
            if (m.train_x.cols() != n_features || m.train_x.rows() != m.train_y.size() || m.train_y.empty()) {
                throw InputError("model: knn training set shape mismatch");
            }
            return Model(config, n_features, std::move(m));
        }
        case Algorithm::dt:
            return Model(config, n_features, tree_from_json(p));
        case Algorithm::rf: {
            RandomForest f;
            for (const auto& jt : p.at("trees")) f.trees.push_back(tree_from_json(jt));
            f.tree_seeds = p.at("tree_seeds").get<std::vector<std::uint64_t>>();
            if (f.trees.empty()) throw InputError("model: forest has no trees");
            return Model(config, n_features, std::move(f));
        }
        case Algorithm::svm: {
            SvmModel m{matrix_from_json(p.at("support_vectors")), p.at("dual_coef").get<std::vector<double>>(),
                       p.at("bias").get<double>(), p.at("gamma").get<double>()};
            if (m.support_vectors.rows() != m.dual_coef.size() ||
                (m.support_vectors.rows() > 0 && m.support_vectors.cols() != n_features)) {
                throw InputError("model: svm shape mismatch");
            }
            return Model(config, n_features, std::move(m));
        }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("model: ") + e.what());
    } catch (const ConfigError& e) {
        throw InputError(std::string("model: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("model: ") + e.what());
    }
    throw InputError("model: unknown algorithm");
}

} // namespace rssiprox::ml
