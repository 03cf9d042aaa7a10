#include "rssiprox/dataset.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "rssiprox/common.hpp"
#include "rssiprox/features.hpp"
#include "rssiprox/rng.hpp"

namespace rssiprox {

namespace {

struct Candidate {
    std::size_t a = 0;
    std::size_t b = 0;
};

struct Draw {
    std::size_t a = 0;
    std::size_t b = 0;
    int trial_a = 0;
    int trial_b = 0;
};

std::vector<std::pair<int, int>> trial_options(const std::vector<int>& trials_a,
                                               const std::vector<int>& trials_b,
                                               TrialMatching matching) {
    std::vector<std::pair<int, int>> out;
    if (matching == TrialMatching::equal) {
        std::set<int> in_b(trials_b.begin(), trials_b.end());
        for (int t : trials_a) {
            if (in_b.contains(t)) {
                out.emplace_back(t, t);
            }
        }
    } else {
        for (int ta : trials_a) {
            for (int tb : trials_b) {
                out.emplace_back(ta, tb);
            }
        }
    }
    return out;
}

std::vector<Draw> draw_class(const std::vector<Candidate>& candidates, std::size_t count,
                             const std::vector<std::vector<int>>& trials, TrialMatching matching,
                             Rng& rng, const char* class_name) {
    std::vector<Draw> draws;
    if (count == 0) {
        return draws;
    }
    if (candidates.empty()) {
        throw std::invalid_argument(std::string("build_pairs: no ") + class_name +
                                    " point pairs available");
    }
    std::set<std::tuple<std::size_t, std::size_t, int, int>> used;
    std::vector<Candidate> order = candidates;
    while (draws.size() < count) {
        rng.shuffle(order);
        bool progressed = false;
        for (const Candidate& c : order) {
            if (draws.size() == count) {
                break;
            }
            std::vector<std::pair<int, int>> fresh;
            for (const auto& [ta, tb] : trial_options(trials[c.a], trials[c.b], matching)) {
                if (!used.contains({c.a, c.b, ta, tb})) {
                    fresh.emplace_back(ta, tb);
                }
            }
            if (fresh.empty()) {
                continue;
            }
            const auto [ta, tb] = fresh[rng.index(fresh.size())];
            used.emplace(c.a, c.b, ta, tb);
            draws.push_back(Draw{c.a, c.b, ta, tb});
            progressed = true;
        }
        if (!progressed) {
            throw std::invalid_argument(std::string("build_pairs: requested ") +
                                        std::to_string(count) + " " + class_name +
                                        " samples but only " + std::to_string(draws.size()) +
                                        " distinct (pair, trial) combinations exist");
        }
    }
    return draws;
}

} // namespace

std::vector<int> unique_values(std::span<const int> values) {
    std::vector<int> out;
    std::set<int> seen;
    for (int v : values) {
        if (seen.insert(v).second) {
            out.push_back(v);
        }
    }
    return out;
}

std::string_view to_string(TrialMatching m) {
    return m == TrialMatching::equal ? "equal" : "random";
}

TrialMatching parse_trial_matching(std::string_view text) {
    if (text == "equal") return TrialMatching::equal;
    if (text == "random") return TrialMatching::random;
    throw ConfigError("unknown trial matching '" + std::string(text) + "' (expected equal|random)");
}

Dataset build_pairs(std::span<const PointRecord> points, const PairingConfig& config,
                    std::uint64_t seed) {
    std::vector<std::vector<int>> trials;
    trials.reserve(points.size());
    for (const auto& p : points) {
        trials.push_back(p.complete_trials());
        if (trials.back().empty()) {
            throw std::invalid_argument("build_pairs: point (" + format_double(p.point.x) + ", " +
                                        format_double(p.point.y) +
                                        ") has no trial covering every access point");
        }
    }

    std::vector<Candidate> same_room;
    std::vector<Candidate> cross_room;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            (points[i].room == points[j].room ? same_room : cross_room).push_back({i, j});
        }
    }

    Rng rng(seed);
    const auto positives =
        draw_class(same_room, config.n_positive, trials, config.matching, rng, "positive");
    const auto negatives =
        draw_class(cross_room, config.n_negative, trials, config.matching, rng, "negative");

    Dataset ds;
    ds.samples.reserve(positives.size() + negatives.size());
    auto emit = [&](const Draw& d, int label) {
        const PointRecord& a = points[d.a];
        const PointRecord& b = points[d.b];
        PairSample s;
        s.point_a = a.point;
        s.point_b = b.point;
        s.trial_a = d.trial_a;
        s.trial_b = d.trial_b;
        s.features = featurize_pair(a, d.trial_a, b, d.trial_b).to_vector();
        s.label = label;
        ds.samples.push_back(s);
    };
    for (const Draw& d : positives) emit(d, 1);
    for (const Draw& d : negatives) emit(d, 0);
    rng.shuffle(ds.samples);

    ds.n_positive = positives.size();
    ds.n_negative = negatives.size();
    return ds;
}

} // namespace rssiprox
