#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "rssiprox/dtw.hpp"
#include "rssiprox/rng.hpp"

using rssiprox::dtw_distance;

namespace {

void check_path_invariants(const rssiprox::WarpResult& r, const std::vector<double>& x, const std::vector<double>& y) {
    REQUIRE(!r.path.empty());
    CHECK(r.path.front() == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(r.path.back() == std::pair<std::size_t, std::size_t>{x.size() - 1, y.size() - 1});
    for (std::size_t k = 1; k < r.path.size(); ++k) {
        const auto di = r.path[k].first - r.path[k - 1].first;
        const auto dj = r.path[k].second - r.path[k - 1].second;
        CHECK(di <= 1);
        CHECK(dj <= 1);
        CHECK(di + dj >= 1);
    }
    CHECK(oracle::path_cost(x, y, r.path) == doctest::Approx(r.distance).epsilon(1e-12));
}

std::vector<double> random_series(rssiprox::Rng& rng, std::size_t max_len) {
    std::vector<double> s(1 + rng.index(max_len));
    for (auto& v : s) v = -100.0 + static_cast<double>(rng.index(61));
    return s;
}

} // namespace

TEST_CASE("dtw: identical sequences align on the diagonal at zero cost") {
    const std::vector<double> x{-50, -60, -70};
    const auto r = dtw_distance(x, x);
    CHECK(r.distance == 0.0);
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(r.path == std::vector<P>{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("dtw: single cell") {
    const std::vector<double> x{0};
    const std::vector<double> y{5};
    const auto r = dtw_distance(x, y);
    CHECK(r.distance == 5.0);
    CHECK(r.path.size() == 1);
}

TEST_CASE("dtw: unequal lengths match the path-enumeration oracle") {
    const std::vector<double> x{1, 2, 3};
    const std::vector<double> y{2, 2, 2, 3, 4};
    const double expected = oracle::brute_force_dtw(x, y);
    REQUIRE(expected == 2.0);
    const auto r = dtw_distance(x, y);
    CHECK(r.distance == expected);
    check_path_invariants(r, x, y);
}

TEST_CASE("dtw: empty input is rejected") {
    const std::vector<double> empty;
    const std::vector<double> one{1};
    CHECK_THROWS_AS(dtw_distance(empty, one), std::invalid_argument);
    CHECK_THROWS_AS(dtw_distance(one, empty), std::invalid_argument);
}

TEST_CASE("dtw: tie-break prefers the diagonal predecessor") {
    // all local costs zero, so every predecessor ties
    const std::vector<double> x{1, 1};
    const std::vector<double> y{1, 1, 1};
    const auto r = dtw_distance(x, y);
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(r.path == std::vector<P>{{0, 0}, {0, 1}, {1, 2}});
}

TEST_CASE("dtw properties on random series") {
    rssiprox::Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_series(rng, 7);
        const auto y = random_series(rng, 7);
        const auto r = dtw_distance(x, y);

        CHECK(r.distance >= 0.0);
        CHECK(r.distance == dtw_distance(y, x).distance);
        check_path_invariants(r, x, y);
        CHECK(r.distance == oracle::brute_force_dtw(x, y));

        if (x.size() == y.size()) {
            double lockstep = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) lockstep += std::abs(x[i] - y[i]);
            CHECK(r.distance <= lockstep);
        }
    }
}

TEST_CASE("dtw: zero distance iff an all-zero alignment exists") {
    // repeats warp onto a single value
    const std::vector<double> x{-50, -50, -60, -70, -70};
    const std::vector<double> y{-50, -60, -60, -70};
    CHECK(dtw_distance(x, y).distance == 0.0);
    const std::vector<double> z{-50, -70, -60};
    CHECK(dtw_distance(x, z).distance > 0.0);
}
