#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rssiprox {

struct WarpResult {
    double distance = 0.0;
    /// Monotone, continuous alignment from (0, 0) to (n-1, m-1).
    std::vector<std::pair<std::size_t, std::size_t>> path;
};

/// Unconstrained dynamic time warping with local cost |x_i - y_j|.
///
/// Full O(n*m) cumulative-cost matrix; the path is recovered by backtracking
/// with ties resolved diagonal first, then (i-1, j), then (i, j-1).
/// Throws std::invalid_argument if either sequence is empty.
WarpResult dtw_distance(std::span<const double> x, std::span<const double> y);

} // namespace rssiprox
