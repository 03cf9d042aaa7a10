#include "rssiprox/ml/forest.hpp"

#include <cmath>
#include <numeric>

#include "rssiprox/rng.hpp"

namespace rssiprox::ml {

int RandomForest::predict_one(std::span<const double> x) const {
    std::size_t votes1 = 0;
    for (const auto& t : trees) {
        votes1 += static_cast<std::size_t>(t.predict_one(x));
    }
    return 2 * votes1 > trees.size() ? 1 : 0;
}

RandomForest fit_forest(const Matrix& x, const Labels& y, const ForestParams& params, std::uint64_t seed) {
    check_training_set(x, y, true);
    const std::size_t n = x.rows();
    const std::size_t default_features =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(x.cols())))));
    const GrowParams grow{params.min_samples_split, params.max_depth,
                          params.max_features.value_or(default_features)};

    RandomForest forest;
    forest.trees.reserve(static_cast<std::size_t>(params.n_trees));
    for (int t = 0; t < params.n_trees; ++t) {
        const std::uint64_t tree_seed = mix_seed(seed, static_cast<std::uint64_t>(t));
        Rng rng(tree_seed);
        std::vector<std::size_t> rows(n);
        if (params.bootstrap) {
            for (auto& r : rows) r = rng.index(n);
        } else {
            std::iota(rows.begin(), rows.end(), 0);
        }
        forest.trees.push_back(grow_tree(x, y, rows, grow, rng));
        forest.tree_seeds.push_back(tree_seed);
    }
    return forest;
}

std::vector<double> mdi_importance(const RandomForest& forest) {
    const std::size_t d = forest.trees.empty() ? 0 : forest.trees.front().n_features;
    std::vector<double> total(d, 0.0);
    std::size_t contributing = 0;
    for (const auto& tree : forest.trees) {
        auto imp = tree.impurity_decrease();
        const double sum = std::accumulate(imp.begin(), imp.end(), 0.0);
        if (!(sum > 0.0)) continue;
        for (std::size_t f = 0; f < d; ++f) total[f] += imp[f] / sum;
        ++contributing;
    }
    if (contributing == 0) return total;
    const double sum = std::accumulate(total.begin(), total.end(), 0.0);
    for (auto& v : total) v /= sum;
    return total;
}

} // namespace rssiprox::ml
