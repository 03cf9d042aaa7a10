#include "rssiprox/ml/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rssiprox::ml {

namespace {

__extension__ typedef unsigned __int128 u128;

// Split quality as the exact fraction (l0^2 + l1^2)/nl + (r0^2 + r1^2)/nr.
// Larger means lower weighted child impurity.
struct SplitScore {
    u128 num = 0;
    u128 den = 1;

    bool operator>(const SplitScore& o) const { return num * o.den > o.num * den; }
    bool operator==(const SplitScore& o) const { return num * o.den == o.num * den; }
};

SplitScore score(std::size_t l0, std::size_t l1, std::size_t r0, std::size_t r1) {
    const u128 nl = l0 + l1;
    const u128 nr = r0 + r1;
    const u128 sl = u128(l0) * l0 + u128(l1) * l1;
    const u128 sr = u128(r0) * r0 + u128(r1) * r1;
    return {sl * nr + sr * nl, nl * nr};
}

struct Candidate {
    bool valid = false;
    int feature = -1;
    double threshold = 0.0;
    SplitScore score;

    bool better_than(const Candidate& o) const {
        if (!o.valid) return true;
        if (score > o.score) return true;
        if (!(score == o.score)) return false;
        if (feature != o.feature) return feature < o.feature;
        return threshold < o.threshold;
    }
};

double midpoint(double a, double b) {
    const double mid = a + (b - a) / 2.0;
    return mid < b ? mid : a;
}

class Grower {
public:
    Grower(const Matrix& x, const Labels& y, const GrowParams& params, Rng& rng)
        : x_(x), y_(y), params_(params), rng_(rng) {}

    DecisionTree run(std::vector<std::size_t> rows) {
        tree_.n_features = x_.cols();
        build(std::move(rows), 0);
        return std::move(tree_);
    }

private:
    int build(std::vector<std::size_t> rows, int depth) {
        TreeNode node;
        for (auto r : rows) ++node.counts[static_cast<std::size_t>(y_[r])];
        node.impurity = gini(node.counts[0], node.counts[1]);
        node.label = node.counts[1] > node.counts[0] ? 1 : 0;

        const int id = static_cast<int>(tree_.nodes.size());
        tree_.nodes.push_back(node);

        const bool pure = node.counts[0] == 0 || node.counts[1] == 0;
        const bool too_small = rows.size() < params_.min_samples_split;
        const bool too_deep = params_.max_depth && depth >= *params_.max_depth;
        if (pure || too_small || too_deep) {
            return id;
        }
        const Candidate best = find_split(rows, node.counts);
        if (!best.valid) {
            return id;
        }

        std::vector<std::size_t> left_rows;
        std::vector<std::size_t> right_rows;
        for (auto r : rows) {
            (x_(r, static_cast<std::size_t>(best.feature)) <= best.threshold ? left_rows : right_rows).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();

        const int left = build(std::move(left_rows), depth + 1);
        const int right = build(std::move(right_rows), depth + 1);
        TreeNode& n = tree_.nodes[static_cast<std::size_t>(id)];
        n.feature = best.feature;
        n.threshold = best.threshold;
        n.left = left;
        n.right = right;
        return id;
    }

    std::vector<std::size_t> feature_order() {
        std::vector<std::size_t> order(x_.cols());
        std::iota(order.begin(), order.end(), 0);
        if (params_.max_features && *params_.max_features < x_.cols()) {
            rng_.shuffle(order);
        }
        return order;
    }

    Candidate find_split(const std::vector<std::size_t>& rows, std::array<std::size_t, 2> total) {
        const std::size_t budget = params_.max_features.value_or(x_.cols());
        std::size_t scored = 0;
        Candidate best;
        std::vector<std::pair<double, int>> column(rows.size());

        for (std::size_t f : feature_order()) {
            if (scored >= budget) break;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                column[i] = {x_(rows[i], f), y_[rows[i]]};
            }
            std::sort(column.begin(), column.end());
            if (column.front().first == column.back().first) {
                continue; // constant here; does not count toward the budget
            }
            ++scored;

            std::array<std::size_t, 2> left{};
            for (std::size_t i = 0; i + 1 < column.size(); ++i) {
                ++left[static_cast<std::size_t>(column[i].second)];
                if (column[i].first == column[i + 1].first) continue;
                Candidate c;
                c.valid = true;
                c.feature = static_cast<int>(f);
                c.threshold = midpoint(column[i].first, column[i + 1].first);
                c.score = score(left[0], left[1], total[0] - left[0], total[1] - left[1]);
                if (c.better_than(best)) best = c;
            }
        }
        return best;
    }

    const Matrix& x_;
    const Labels& y_;
    const GrowParams& params_;
    Rng& rng_;
    DecisionTree tree_;
};

} // namespace

double gini(std::size_t n0, std::size_t n1) {
    const std::size_t n = n0 + n1;
    if (n == 0) {
        throw std::invalid_argument("gini: empty set");
    }
    const double p0 = static_cast<double>(n0) / static_cast<double>(n);
    const double p1 = static_cast<double>(n1) / static_cast<double>(n);
    return 1.0 - p0 * p0 - p1 * p1;
}

double gini(std::span<const int> labels) {
    std::size_t n1 = 0;
    for (int l : labels) {
        if (l != 0 && l != 1) throw std::invalid_argument("gini: labels must be 0 or 1");
        n1 += static_cast<std::size_t>(l);
    }
    return gini(labels.size() - n1, n1);
}

int DecisionTree::predict_one(std::span<const double> x) const {
    std::size_t at = 0;
    while (!nodes[at].is_leaf()) {
        const TreeNode& n = nodes[at];
        at = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
    }
    return nodes[at].label;
}

int DecisionTree::depth() const {
    std::vector<int> level(nodes.size(), 0);
    int deepest = 0;
    // children always follow their parent in storage order
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        deepest = std::max(deepest, level[i]);
        if (!nodes[i].is_leaf()) {
            level[static_cast<std::size_t>(nodes[i].left)] = level[i] + 1;
            level[static_cast<std::size_t>(nodes[i].right)] = level[i] + 1;
        }
    }
    return deepest;
}

std::vector<double> DecisionTree::impurity_decrease() const {
    std::vector<double> out(n_features, 0.0);
    if (nodes.empty()) return out;
    const double root_n = static_cast<double>(nodes[0].n_samples());
    for (const TreeNode& n : nodes) {
        if (n.is_leaf()) continue;
        const TreeNode& l = nodes[static_cast<std::size_t>(n.left)];
        const TreeNode& r = nodes[static_cast<std::size_t>(n.right)];
        const double decrease = static_cast<double>(n.n_samples()) * n.impurity -
                                static_cast<double>(l.n_samples()) * l.impurity -
                                static_cast<double>(r.n_samples()) * r.impurity;
        // concavity of Gini makes the decrease >= 0; clamp rounding noise
        out[static_cast<std::size_t>(n.feature)] += std::max(0.0, decrease) / root_n;
    }
    return out;
}

DecisionTree grow_tree(const Matrix& x, const Labels& y, std::span<const std::size_t> rows,
                       const GrowParams& params, Rng& rng) {
    if (rows.empty()) {
        throw std::invalid_argument("grow_tree: no rows");
    }
    return Grower(x, y, params, rng).run(std::vector<std::size_t>(rows.begin(), rows.end()));
}

DecisionTree fit_tree(const Matrix& x, const Labels& y, const TreeParams& params, std::uint64_t seed) {
    check_training_set(x, y, true);
    std::vector<std::size_t> rows(x.rows());
    std::iota(rows.begin(), rows.end(), 0);
    Rng rng(seed);
    const GrowParams grow{params.min_samples_split, params.max_depth, params.max_features};
    return grow_tree(x, y, rows, grow, rng);
}

} // namespace rssiprox::ml
