#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "rssiprox/common.hpp"
#include "rssiprox/ml/forest.hpp"
#include "rssiprox/ml/knn.hpp"
#include "rssiprox/ml/logistic.hpp"
#include "rssiprox/ml/model.hpp"
#include "rssiprox/ml/svm.hpp"
#include "rssiprox/ml/tree.hpp"
#include "synthetic.hpp"

using namespace rssiprox;
using namespace rssiprox::ml;
using synthetic::training_accuracy;

namespace {

TrainConfig config_for(Algorithm a, std::uint64_t seed = 1) {
    TrainConfig cfg;
    cfg.algorithm = a;
    cfg.seed = seed;
    return cfg;
}

// Best achievable weighted child impurity over every feature and every
// midpoint between adjacent distinct values.
double best_child_impurity(const Matrix& x, const Labels& y) {
    double best = gini(std::span<const int>(y));
    for (std::size_t f = 0; f < x.cols(); ++f) {
        std::vector<double> vals;
        for (std::size_t i = 0; i < x.rows(); ++i) vals.push_back(x(i, f));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
            const double t = (vals[k] + vals[k + 1]) / 2.0;
            std::vector<int> l;
            std::vector<int> r;
            for (std::size_t i = 0; i < x.rows(); ++i) (x(i, f) <= t ? l : r).push_back(y[i]);
            const double n = static_cast<double>(y.size());
            const double w = static_cast<double>(l.size()) / n * gini(std::span<const int>(l)) +
                             static_cast<double>(r.size()) / n * gini(std::span<const int>(r));
            best = std::min(best, w);
        }
    }
    return best;
}

} // namespace

TEST_CASE("gini") {
    CHECK(gini(std::vector<int>{1, 1, 1}) == 0.0);
    CHECK(gini(std::vector<int>{0, 1}) == 0.5);
    CHECK(gini(std::vector<int>{1, 1, 1, 0}) == 0.375);
    CHECK(gini(3, 1) == 0.375);
    CHECK_THROWS_AS(gini(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("decision tree learns XOR") {
    const auto x = Matrix::from_rows({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const Labels y{0, 1, 1, 0};
    const auto tree = fit_tree(x, y, TreeParams{}, 3);
    CHECK(tree.depth() >= 2);
    for (std::size_t i = 0; i < 4; ++i) CHECK(tree.predict_one(x.row(i)) == y[i]);
}

TEST_CASE("every algorithm separates two clusters") {
    const auto d = synthetic::two_clusters(60, 2, 1.5, 12);
    for (Algorithm a : kAllAlgorithms) {
        CAPTURE(to_string(a));
        const auto m = train(d.x, d.y, config_for(a));
        CHECK(training_accuracy(d.y, predict(m, d.x)) == 1.0);
    }
}

TEST_CASE("knn with k=1 memorises the training set") {
    const auto d = synthetic::noise(80, 5, 4);
    const auto m = fit_knn(d.x, d.y, 1);
    for (std::size_t i = 0; i < d.x.rows(); ++i) CHECK(m.predict_one(d.x.row(i)) == d.y[i]);
}

TEST_CASE("knn vote ties go to class 0") {
    const auto x = Matrix::from_rows({{0.0}, {1.0}});
    const auto m = fit_knn(x, Labels{1, 0}, 2);
    const std::vector<double> q{0.4};
    CHECK(m.predict_one(q) == 0);
}

TEST_CASE("pure-leaf tree reproduces its training labels") {
    const auto d = synthetic::noise(50, 3, 8);
    const auto tree = fit_tree(d.x, d.y, TreeParams{}, 1);
    for (std::size_t i = 0; i < d.x.rows(); ++i) CHECK(tree.predict_one(d.x.row(i)) == d.y[i]);
}

TEST_CASE("logistic regression") {
    SUBCASE("zero weights predict the positive class") {
        LogisticModel m{{0.0, 0.0}, 0.0};
        const std::vector<double> q{3.0, -2.0};
        CHECK(m.probability(q) == 0.5);
        CHECK(m.predict_one(q) == 1);
    }
    SUBCASE("loss never increases") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto d = synthetic::noise(120, 6, seed);
            const auto fit = fit_logistic(d.x, d.y, LrParams{});
            REQUIRE(fit.loss_history.size() == 1001);
            CHECK(fit.loss_history.front() == doctest::Approx(std::log(2.0)));
            for (std::size_t i = 1; i < fit.loss_history.size(); ++i) {
                CHECK(fit.loss_history[i] <= fit.loss_history[i - 1] + 1e-15);
            }
            CHECK(fit.loss_history.back() == doctest::Approx(cross_entropy(fit.model, d.x, d.y)));
        }
    }
}

TEST_CASE("svm dual solution is feasible and near-KKT") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto d = synthetic::noise(60, 3, 100 + seed);
        const SvmParams params;
        const auto fit = fit_svm(d.x, d.y, params, seed);
        REQUIRE(fit.alphas.size() == d.y.size());
        double balance = 0.0;
        for (std::size_t i = 0; i < fit.alphas.size(); ++i) {
            CHECK(fit.alphas[i] >= 0.0);
            CHECK(fit.alphas[i] <= params.c);
            balance += fit.alphas[i] * (d.y[i] == 1 ? 1.0 : -1.0);
        }
        CHECK(std::abs(balance) < 1e-9);

        // The simplified solver stops once no pair makes progress, so KKT
        // holds up to a small slack rather than exactly at tol.
        constexpr double slack = 0.05;
        for (std::size_t i = 0; i < fit.alphas.size(); ++i) {
            const double yi = d.y[i] == 1 ? 1.0 : -1.0;
            const double margin = yi * fit.model.decision(d.x.row(i));
            const double a = fit.alphas[i];
            if (a < 1e-8) CHECK(margin >= 1.0 - slack);
            else if (a > params.c - 1e-8) CHECK(margin <= 1.0 + slack);
            else CHECK(std::abs(margin - 1.0) <= slack);
        }
    }
}

TEST_CASE("svm gamma scaling") {
    const auto x = Matrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    CHECK(scale_gamma(x) == 1.0);
    const auto y = Matrix::from_rows({{0.0, 0.0}, {2.0, 2.0}});
    // variance over all entries is 1, two columns
    CHECK(scale_gamma(y) == 0.5);
    CHECK(rbf_kernel(y.row(0), y.row(1), 0.5) == doctest::Approx(std::exp(-4.0)));
}

TEST_CASE("random forest determinism and tie rule") {
    const auto d = synthetic::noise(100, 18, 5);
    const auto a = fit_forest(d.x, d.y, ForestParams{}, 77);
    const auto b = fit_forest(d.x, d.y, ForestParams{}, 77);
    CHECK(a == b);
    CHECK_FALSE(a == fit_forest(d.x, d.y, ForestParams{}, 78));
    CHECK(a.trees.size() == 100);

    RandomForest split_vote;
    split_vote.trees.resize(2);
    split_vote.trees[0].nodes.push_back(TreeNode{});
    split_vote.trees[0].nodes[0].label = 0;
    split_vote.trees[1].nodes.push_back(TreeNode{});
    split_vote.trees[1].nodes[0].label = 1;
    const std::vector<double> q(18, 0.0);
    CHECK(split_vote.predict_one(q) == 0);
}

TEST_CASE("mdi importance") {
    SUBCASE("single split tree is one-hot") {
        Matrix x(8, 18, 0.0);
        Labels y;
        for (std::size_t i = 0; i < 8; ++i) {
            x(i, 3) = static_cast<double>(i);
            y.push_back(i < 4 ? 0 : 1);
        }
        ForestParams p;
        p.n_trees = 1;
        p.bootstrap = false;
        p.max_features = 18;
        const auto forest = fit_forest(x, y, p, 1);
        const auto imp = mdi_importance(forest);
        for (std::size_t f = 0; f < 18; ++f) CHECK(imp[f] == (f == 3 ? 1.0 : 0.0));
    }
    SUBCASE("single informative feature dominates") {
        const auto d = synthetic::single_informative(300, 0, 21);
        ForestParams p;
        p.max_features = 18;
        const auto imp = mdi_importance(fit_forest(d.x, d.y, p, 9));
        CHECK(imp[0] > 0.9);
        CHECK(std::accumulate(imp.begin(), imp.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));

        // With sqrt(18) candidates most nodes cannot see column 0 and must
        // split on noise, so its share drops but it still leads.
        const auto sub = mdi_importance(fit_forest(d.x, d.y, ForestParams{}, 9));
        CHECK(sub[0] > 0.5);
        CHECK(std::max_element(sub.begin(), sub.end()) == sub.begin());
    }
    SUBCASE("normalised on noise") {
        const auto d = synthetic::noise(150, 18, 2);
        const auto imp = mdi_importance(fit_forest(d.x, d.y, ForestParams{}, 4));
        REQUIRE(imp.size() == 18);
        for (double v : imp) CHECK(v >= 0.0);
        CHECK(std::abs(std::accumulate(imp.begin(), imp.end(), 0.0) - 1.0) <= 1e-9);
    }
    SUBCASE("forest without splits gives zeros") {
        const auto x = Matrix::from_rows({{1.0}, {1.0}});
        const auto imp = mdi_importance(fit_forest(x, Labels{0, 1}, ForestParams{}, 1));
        CHECK(imp == std::vector<double>{0.0});
    }
}

TEST_CASE("tree root split is optimal") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto d = synthetic::noise(30, 4, 500 + seed);
        // coarse values create repeated thresholds and ties
        for (double& v : const_cast<std::vector<double>&>(d.x.values())) v = std::round(v * 3.0);
        const auto tree = fit_tree(d.x, d.y, TreeParams{}, seed);
        const auto& root = tree.nodes.front();
        if (root.is_leaf()) continue;
        const auto& l = tree.nodes[static_cast<std::size_t>(root.left)];
        const auto& r = tree.nodes[static_cast<std::size_t>(root.right)];
        const double n = static_cast<double>(root.n_samples());
        const double got = static_cast<double>(l.n_samples()) / n * l.impurity +
                           static_cast<double>(r.n_samples()) / n * r.impurity;
        CHECK(got == doctest::Approx(best_child_impurity(d.x, d.y)).epsilon(1e-12));
    }
}

TEST_CASE("training input validation") {
    const auto x = Matrix::from_rows({{1.0}, {2.0}});
    CHECK_THROWS(train(x, Labels{0}, config_for(Algorithm::dt)));
    CHECK_THROWS(train(x, Labels{0, 2}, config_for(Algorithm::dt)));
    CHECK_THROWS(train(Matrix(), Labels{}, config_for(Algorithm::knn)));
    const auto m = train(x, Labels{0, 1}, config_for(Algorithm::knn));
    CHECK_THROWS(predict(m, Matrix(1, 2)));
}

TEST_CASE("train config parsing") {
    TrainConfig cfg;
    CHECK(cfg.set("rf.max_features", "3"));
    CHECK(cfg.rf.max_features == std::optional<std::size_t>{3});
    CHECK(cfg.set("rf.max_features", "auto"));
    CHECK_FALSE(cfg.rf.max_features.has_value());
    CHECK(cfg.set("svm.gamma", "0.25"));
    CHECK_FALSE(cfg.set("nope", "1"));
    CHECK_THROWS_AS(cfg.set("lr.iterations", "ten"), ConfigError);
    CHECK_THROWS_AS(parse_algorithm("xgboost"), ConfigError);
    cfg.knn.k = 4;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    TrainConfig back;
    for (const auto& [k, v] : TrainConfig{}.to_key_values()) {
        if (k != "algorithm" && k != "seed") CHECK(back.set(k, v));
    }
    CHECK(back == TrainConfig{});
}

TEST_CASE("model json round trip") {
    const auto d = synthetic::noise(40, 18, 6);
    for (Algorithm a : kAllAlgorithms) {
        CAPTURE(to_string(a));
        auto cfg = config_for(a, 5);
        cfg.rf.n_trees = 7;
        const auto m = train(d.x, d.y, cfg);
        const auto doc = to_json(m);
        const auto back = model_from_json(nlohmann::json::parse(doc.dump()));
        CHECK(back == m);
        CHECK(predict(back, d.x) == predict(m, d.x));
    }
}

TEST_CASE("model json errors") {
    const auto d = synthetic::noise(20, 2, 6);
    auto doc = to_json(train(d.x, d.y, config_for(Algorithm::lr)));
    auto bad = doc;
    bad["format"] = "something-else";
    CHECK_THROWS_AS(model_from_json(bad), InputError);
    bad = doc;
    bad["version"] = 99;
    CHECK_THROWS_AS(model_from_json(bad), InputError);
    bad = doc;
    bad.erase("params");
    CHECK_THROWS_AS(model_from_json(bad), InputError);
    CHECK_THROWS_AS(model_from_json(nlohmann::json::array()), InputError);
}
