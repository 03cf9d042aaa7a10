#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace rssiprox {

/// Derives an independent child seed from a parent seed and an integer key.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key);

/// Derives a child seed from a parent seed and a stage name (e.g. "simulate").
std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage);

/// Seeded generator with platform-independent distributions.
///
/// std::mt19937_64 output is fully specified by the standard, but the
/// <random> distributions are not; these are implemented here so that a
/// given seed yields the same stream on every toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n); n must be positive.
    std::size_t index(std::size_t n);

    /// Standard normal via Box-Muller.
    double normal();

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace rssiprox
