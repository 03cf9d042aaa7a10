#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rssiprox/dataset.hpp"
#include "rssiprox/eval/evaluate.hpp"
#include "rssiprox/ml/config.hpp"
#include "rssiprox/simulator.hpp"

namespace rssiprox::cli {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Merged configuration for every stage. A single top-level seed derives the
/// per-stage seeds, so each stage can be rerun on its own.
struct RunConfig {
    std::uint64_t seed = 42;
    SimConfig sim;
    PairingConfig pairing;
    ml::TrainConfig train;
    eval::EvalOptions eval;

    /// Keys: seed, algorithm, sim.*, pairs.*, lr.*, knn.*, dt.*, rf.*, svm.*,
    /// eval.*. Throws ConfigError for unknown keys or bad values.
    void set(std::string_view key, std::string_view value);

    /// Effective configuration in a fixed order (echoed into outputs).
    KeyValues effective() const;

    SimConfig sim_config() const;        ///< seeded from stage "simulate"
    std::uint64_t pairing_seed() const;  ///< stage "featurize"
    ml::TrainConfig train_config() const; ///< seeded from stage "train"
    std::uint64_t eval_seed() const;     ///< stage "evaluate"

    void validate() const;
};

/// Applies `key = value` lines; blank lines and '#' comments are skipped.
/// Throws ConfigError with the line number on bad entries.
void apply_config_stream(RunConfig& config, std::istream& in);

/// Throws InputError if the file cannot be opened.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

} // namespace rssiprox::cli
