#include "rssiprox/eval/split.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rssiprox/rng.hpp"

namespace rssiprox::eval {

namespace {

std::vector<std::vector<std::size_t>> by_class(const ml::Labels& labels) {
    std::vector<std::vector<std::size_t>> groups(2);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) throw std::invalid_argument("labels must be 0 or 1");
        groups[static_cast<std::size_t>(labels[i])].push_back(i);
    }
    return groups;
}

} // namespace

SplitIndices stratified_split(const ml::Labels& labels, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("split: train fraction must be in (0, 1)");
    }
    auto groups = by_class(labels);
    Rng rng(seed);
    SplitIndices out;
    for (std::size_t c = 0; c < groups.size(); ++c) {
        auto& g = groups[c];
        if (g.size() < 2) {
            throw std::invalid_argument("split: class " + std::to_string(c) + " has fewer than 2 samples");
        }
        rng.shuffle(g);
        const auto wanted = static_cast<std::size_t>(std::llround(static_cast<double>(g.size()) * (1.0 - train_fraction)));
        const std::size_t n_test = std::clamp<std::size_t>(wanted, 1, g.size() - 1);
        out.test.insert(out.test.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n_test));
        out.train.insert(out.train.end(), g.begin() + static_cast<std::ptrdiff_t>(n_test), g.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

std::vector<Fold> kfold(const ml::Labels& labels, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("kfold: k must be >= 2");
    if (labels.size() < k) {
        throw std::invalid_argument("kfold: " + std::to_string(labels.size()) + " samples cannot fill " +
                                    std::to_string(k) + " folds");
    }
    auto groups = by_class(labels);
    Rng rng(seed);
    std::vector<std::size_t> dealt;
    for (auto& g : groups) {
        rng.shuffle(g);
        dealt.insert(dealt.end(), g.begin(), g.end());
    }
    std::vector<std::size_t> fold_of(labels.size());
    for (std::size_t p = 0; p < dealt.size(); ++p) {
        fold_of[dealt[p]] = p % k;
    }
    std::vector<Fold> folds(k);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t f = 0; f < k; ++f) {
            (fold_of[i] == f ? folds[f].validation : folds[f].train).push_back(i);
        }
    }
    return folds;
}

} // namespace rssiprox::eval
