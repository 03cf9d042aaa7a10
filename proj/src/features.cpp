#include "rssiprox/features.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "rssiprox/dataset.hpp"
#include "rssiprox/dtw.hpp"

namespace rssiprox {

namespace {

void require_nonempty(std::span<const int> u, std::span<const int> v, const char* op) {
    if (u.empty() || v.empty()) {
        throw std::invalid_argument(std::string(op) + ": empty input");
    }
}

std::set<int> set_union(std::span<const int> u, std::span<const int> v) {
    std::set<int> out(u.begin(), u.end());
    out.insert(v.begin(), v.end());
    return out;
}

double mean_magnitude(std::span<const int> values) {
    double sum = 0.0;
    for (int s : values) {
        sum += std::abs(s);
    }
    return sum / static_cast<double>(values.size());
}

double fraction_at_or_below(const std::set<int>& values, int threshold) {
    const auto n = std::count_if(values.begin(), values.end(), [&](int s) { return s <= threshold; });
    return static_cast<double>(n) / static_cast<double>(values.size());
}

} // namespace

double mean_difference(std::span<const int> u, std::span<const int> v) {
    require_nonempty(u, v, "mean_difference");
    return std::abs(mean_magnitude(u) - mean_magnitude(v));
}

double mean_strength(std::span<const int> u, std::span<const int> v) {
    require_nonempty(u, v, "mean_strength");
    const auto all = set_union(u, v);
    double sum = 0.0;
    for (int s : all) {
        sum += std::abs(s);
    }
    return sum / static_cast<double>(all.size());
}

double min_strength(std::span<const int> u, std::span<const int> v) {
    require_nonempty(u, v, "min_strength");
    int best = std::abs(u.front());
    for (int s : u) best = std::min(best, std::abs(s));
    for (int s : v) best = std::min(best, std::abs(s));
    return static_cast<double>(best);
}

double high_strength_ratio(std::span<const int> u, std::span<const int> v) {
    require_nonempty(u, v, "high_strength_ratio");
    return fraction_at_or_below(set_union(u, v), kHighThresholdDbm);
}

double avg_strength_ratio(std::span<const int> u, std::span<const int> v) {
    require_nonempty(u, v, "avg_strength_ratio");
    return fraction_at_or_below(set_union(u, v), kAvgThresholdDbm);
}

double signal_similarity(std::span<const int> u, std::span<const int> v) {
    require_nonempty(u, v, "signal_similarity");
    const std::vector<double> x(u.begin(), u.end());
    const std::vector<double> y(v.begin(), v.end());
    return dtw_distance(x, y).distance;
}

ApFeatures ap_features(std::span<const int> u, std::span<const int> v) {
    return ApFeatures{
        .md = mean_difference(u, v),
        .s_avg = mean_strength(u, v),
        .s_min = min_strength(u, v),
        .rssi_high = high_strength_ratio(u, v),
        .rssi_avg = avg_strength_ratio(u, v),
        .dtw = signal_similarity(u, v),
    };
}

FeatureVector PairFeatures::to_vector() const {
    FeatureVector out{};
    for (std::size_t ap = 0; ap < per_ap.size(); ++ap) {
        const ApFeatures& f = per_ap[ap];
        const std::size_t base = ap * kFeaturesPerAp;
        out[base + 0] = f.md;
        out[base + 1] = f.s_avg;
        out[base + 2] = f.s_min;
        out[base + 3] = f.rssi_high;
        out[base + 4] = f.rssi_avg;
        out[base + 5] = f.dtw;
    }
    return out;
}

PairFeatures featurize_pair(const PointRecord& a, int trial_a, const PointRecord& b, int trial_b) {
    PairFeatures out;
    for (int ap = 1; ap <= kNumAps; ++ap) {
        const Trace* ta = a.find(ap, trial_a);
        const Trace* tb = b.find(ap, trial_b);
        if (ta == nullptr || tb == nullptr) {
            throw std::invalid_argument("featurize_pair: missing trace for ap " + std::to_string(ap));
        }
        const auto u = unique_values(ta->values);
        const auto v = unique_values(tb->values);
        out.per_ap[static_cast<std::size_t>(ap - 1)] = ap_features(u, v);
    }
    return out;
}

const std::array<std::string_view, kNumFeatures>& feature_names() {
    static const std::array<std::string_view, kNumFeatures> names{
        "md_1", "savg_1", "smin_1", "high_1", "avg_1", "dtw_1",
        "md_2", "savg_2", "smin_2", "high_2", "avg_2", "dtw_2",
        "md_3", "savg_3", "smin_3", "high_3", "avg_3", "dtw_3",
    };
    return names;
}

} // namespace rssiprox
