#include "rssiprox/eval/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rssiprox::eval {

double silverman_bandwidth(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw std::invalid_argument("kde: need at least two samples");
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sigma = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sigma > 0.0)) {
        throw DegenerateSample("kde: zero spread, density is a point mass");
    }
    return 1.06 * sigma * std::pow(static_cast<double>(n), -0.2);
}

std::vector<double> kde(std::span<const double> values, std::span<const double> grid, double bandwidth) {
    if (values.empty()) throw std::invalid_argument("kde: no samples");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("kde: bandwidth must be > 0");
    const double norm = 1.0 / (static_cast<double>(values.size()) * bandwidth * std::sqrt(2.0 * std::numbers::pi));
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) {
        double sum = 0.0;
        for (double v : values) {
            const double u = (x - v) / bandwidth;
            sum += std::exp(-0.5 * u * u);
        }
        out.push_back(norm * sum);
    }
    return out;
}

std::vector<double> kde(std::span<const double> values, std::span<const double> grid) {
    return kde(values, grid, silverman_bandwidth(values));
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw std::invalid_argument("linspace: need at least two points");
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

double trapezoid(std::span<const double> grid, std::span<const double> f) {
    if (grid.size() != f.size()) throw std::invalid_argument("trapezoid: size mismatch");
    double total = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        total += 0.5 * (f[i] + f[i - 1]) * (grid[i] - grid[i - 1]);
    }
    return total;
}

double overlap_coefficient(std::span<const double> grid, std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size()) throw std::invalid_argument("overlap_coefficient: size mismatch");
    std::vector<double> lower(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) lower[i] = std::min(f[i], g[i]);
    return trapezoid(grid, lower);
}

} // namespace rssiprox::eval
