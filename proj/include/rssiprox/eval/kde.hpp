#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rssiprox::eval {

/// Raised when a sample has no spread; the density is a point mass.
class DegenerateSample : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Silverman's rule of thumb, 1.06 * sigma * n^(-1/5), with sigma the
/// sample standard deviation. Throws DegenerateSample for zero spread and
/// std::invalid_argument for fewer than two values.
double silverman_bandwidth(std::span<const double> values);

/// Gaussian kernel density estimate at each grid point with the Silverman
/// bandwidth: f(x) = 1/(n h) * sum phi((x - v_i) / h).
std::vector<double> kde(std::span<const double> values, std::span<const double> grid);

/// Same estimate with an explicit bandwidth h > 0.
std::vector<double> kde(std::span<const double> values, std::span<const double> grid, double bandwidth);

/// `count` evenly spaced points from lo to hi inclusive (count >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Trapezoid-rule integral of samples f over an ascending grid.
double trapezoid(std::span<const double> grid, std::span<const double> f);

/// Overlap coefficient: integral of min(f, g) over the grid.
double overlap_coefficient(std::span<const double> grid, std::span<const double> f, std::span<const double> g);

} // namespace rssiprox::eval
