#include "rssiprox/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rssiprox {

WarpResult dtw_distance(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("dtw_distance: empty sequence");
    }
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // cost(i, j) at i * m + j
    std::vector<double> cost(n * m, inf);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return cost[i * m + j]; };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double local = std::abs(x[i] - y[j]);
            if (i == 0 && j == 0) {
                at(i, j) = local;
                continue;
            }
            double best = inf;
            if (i > 0 && j > 0) best = std::min(best, at(i - 1, j - 1));
            if (i > 0) best = std::min(best, at(i - 1, j));
            if (j > 0) best = std::min(best, at(i, j - 1));
            at(i, j) = local + best;
        }
    }

    WarpResult result;
    result.distance = at(n - 1, m - 1);

    std::size_t i = n - 1;
    std::size_t j = m - 1;
    result.path.emplace_back(i, j);
    while (i > 0 || j > 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = at(i - 1, j - 1);
            const double up = at(i - 1, j);
            const double left = at(i, j - 1);
            if (diag <= up && diag <= left) {
                --i;
                --j;
            } else if (up <= left) {
                --i;
            } else {
                --j;
            }
        }
        result.path.emplace_back(i, j);
    }
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

} // namespace rssiprox
