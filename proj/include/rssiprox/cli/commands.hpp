#pragma once

#include <string>
#include <vector>

#include "rssiprox/cli/run_config.hpp"
#include "rssiprox/eval/evaluate.hpp"
#include "rssiprox/feature_io.hpp"
#include "rssiprox/types.hpp"

namespace rssiprox::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitRuntime = 1,
    kExitInput = 2,  ///< missing or invalid file
    kExitConfig = 3, ///< invalid configuration or flags
};

/// Entry point for `rssiprox <simulate|featurize|train|evaluate|benchmark>`.
/// Failures print one line to stderr:
///   error: code=<n> kind=<input|config|runtime> message="<json-escaped text>"
int run(int argc, char** argv);

/// Same as above; args[0] is the program name.
int run(const std::vector<std::string>& args);

// Stage bodies shared by the individual subcommands and `benchmark`.
std::vector<PointRecord> simulate_stage(const RunConfig& config);
Dataset featurize_stage(const std::vector<PointRecord>& points, const RunConfig& config);
eval::EvalReport evaluate_stage(const FeatureTable& table, const RunConfig& config);

} // namespace rssiprox::cli
