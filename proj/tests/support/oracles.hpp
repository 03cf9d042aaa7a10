#pragma once

// Test-only reference implementations. These deliberately avoid the library
// code paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Path = std::vector<std::pair<std::size_t, std::size_t>>;

/// Every monotone, continuous warping path from (0,0) to (n-1,m-1).
inline void enumerate_paths(std::size_t n, std::size_t m, Path& current, std::vector<Path>& out) {
    const auto [i, j] = current.back();
    if (i == n - 1 && j == m - 1) {
        out.push_back(current);
        return;
    }
    const std::pair<std::size_t, std::size_t> steps[] = {{1, 0}, {0, 1}, {1, 1}};
    for (auto [di, dj] : steps) {
        if (i + di < n && j + dj < m) {
            current.emplace_back(i + di, j + dj);
            enumerate_paths(n, m, current, out);
            current.pop_back();
        }
    }
}

inline std::vector<Path> all_paths(std::size_t n, std::size_t m) {
    std::vector<Path> out;
    Path start{{0, 0}};
    enumerate_paths(n, m, start, out);
    return out;
}

template <typename Seq>
double path_cost(const Seq& x, const Seq& y, const Path& path) {
    double total = 0.0;
    for (auto [i, j] : path) total += std::abs(static_cast<double>(x[i]) - static_cast<double>(y[j]));
    return total;
}

template <typename Seq>
double brute_force_dtw(const Seq& x, const Seq& y, const std::vector<Path>& paths) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : paths) best = std::min(best, path_cost(x, y, p));
    return best;
}

template <typename Seq>
double brute_force_dtw(const Seq& x, const Seq& y) {
    return brute_force_dtw(x, y, all_paths(x.size(), y.size()));
}

struct Counts {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
};

inline Counts recount(const std::vector<int>& truth, const std::vector<int>& pred, int positive) {
    Counts c;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool t = truth[i] == positive;
        const bool p = pred[i] == positive;
        if (t && p) ++c.tp;
        else if (!t && p) ++c.fp;
        else if (t && !p) ++c.fn;
        else ++c.tn;
    }
    return c;
}

/// Accuracy as a single correctly rounded division of exact integers.
inline double exact_accuracy(const Counts& c) {
    return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.tp + c.tn + c.fp + c.fn);
}

/// F1 via exact rational arithmetic on 2 / (1/P + 1/R), with P = tp/(tp+fp)
/// and R = tp/(tp+fn), reduced to lowest terms before one final division.
inline double exact_f1(const Counts& c) {
    if (c.tp == 0) return 0.0;
    // 1/P + 1/R = (tp+fp)/tp + (tp+fn)/tp = (2tp + fp + fn)/tp
    std::uint64_t num = 2 * c.tp;
    std::uint64_t den = (c.tp + c.fp) + (c.tp + c.fn);
    const std::uint64_t g = std::gcd(num, den);
    return static_cast<double>(num / g) / static_cast<double>(den / g);
}

} // namespace oracle

namespace oracle {

/// Six per-AP features recomputed from raw traces with std::set and plain
/// loops. Order: md, s_avg, s_min, rssi_high, rssi_avg, dtw.
inline std::vector<double> ap_features(const std::vector<int>& raw_a, const std::vector<int>& raw_b) {
    auto dedup = [](const std::vector<int>& raw) {
        std::vector<int> out;
        std::set<int> seen;
        for (int v : raw)
            if (seen.insert(v).second) out.push_back(v);
        return out;
    };
    const auto u = dedup(raw_a);
    const auto v = dedup(raw_b);
    auto mean_mag = [](const std::vector<int>& s) {
        long total = 0;
        for (int x : s) total += -x;
        return static_cast<double>(total) / static_cast<double>(s.size());
    };
    std::set<int> uni(u.begin(), u.end());
    uni.insert(v.begin(), v.end());
    long total = 0;
    int best = 1000;
    int high = 0;
    int avg = 0;
    for (int x : uni) {
        total += -x;
        best = std::min(best, -x);
        high += x <= -50 ? 1 : 0;
        avg += x <= -70 ? 1 : 0;
    }
    const double n = static_cast<double>(uni.size());
    return {std::abs(mean_mag(u) - mean_mag(v)), static_cast<double>(total) / n, static_cast<double>(best),
            high / n, avg / n, brute_force_dtw(u, v)};
}

} // namespace oracle
