#include "rssiprox/ml/knn.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rssiprox::ml {

KnnModel fit_knn(const Matrix& x, const Labels& y, int k) {
    check_training_set(x, y, false);
    if (k < 1) {
        throw std::invalid_argument("knn: k must be >= 1");
    }
    return KnnModel{k, x, y};
}

int KnnModel::predict_one(std::span<const double> x) const {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(train_x.rows());
    for (std::size_t i = 0; i < train_x.rows(); ++i) {
        const auto row = train_x.row(i);
        double sq = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double diff = row[j] - x[j];
            sq += diff * diff;
        }
        dist.emplace_back(sq, i);
    }
    const std::size_t kk = std::min(static_cast<std::size_t>(k), dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk), dist.end());
    std::size_t votes1 = 0;
    for (std::size_t i = 0; i < kk; ++i) {
        votes1 += train_y[dist[i].second] == 1 ? 1 : 0;
    }
    return 2 * votes1 > kk ? 1 : 0;
}

} // namespace rssiprox::ml
