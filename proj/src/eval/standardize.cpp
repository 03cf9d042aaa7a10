#include "rssiprox/eval/standardize.hpp"

#include <cmath>
#include <stdexcept>

namespace rssiprox::eval {

Standardizer standardize_fit(const ml::Matrix& x) {
    if (x.rows() < 2) {
        throw std::invalid_argument("standardize_fit: need at least two rows");
    }
    for (double v : x.values()) {
        if (!std::isfinite(v)) throw std::invalid_argument("standardize_fit: non-finite input");
    }
    const std::size_t n = x.rows();
    Standardizer s;
    s.means.assign(x.cols(), 0.0);
    s.stds.assign(x.cols(), 0.0);
    for (std::size_t c = 0; c < x.cols(); ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) mean += x(r, c);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t r = 0; r < n; ++r) var += (x(r, c) - mean) * (x(r, c) - mean);
        s.means[c] = mean;
        s.stds[c] = std::sqrt(var / static_cast<double>(n));
    }
    return s;
}

ml::Matrix Standardizer::apply(const ml::Matrix& x) const {
    ml::check_columns(x, means.size());
    ml::Matrix out(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            out(r, c) = stds[c] > 0.0 ? (x(r, c) - means[c]) / stds[c] : 0.0;
        }
    }
    return out;
}

ml::Matrix standardize_apply(const Standardizer& s, const ml::Matrix& x) {
    return s.apply(x);
}

} // namespace rssiprox::eval
