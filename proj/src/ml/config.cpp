#include "rssiprox/ml/config.hpp"

#include <type_traits>

#include "rssiprox/common.hpp"

namespace rssiprox::ml {

namespace {

long long int_value(std::string_view key, std::string_view value) {
    try {
        return parse_int(value);
    } catch (const InputError&) {
        throw ConfigError(std::string(key) + ": not an integer: '" + std::string(value) + "'");
    }
}

double real_value(std::string_view key, std::string_view value) {
    try {
        return parse_double(value);
    } catch (const InputError&) {
        throw ConfigError(std::string(key) + ": not a number: '" + std::string(value) + "'");
    }
}

std::size_t count_value(std::string_view key, std::string_view value) {
    const long long v = int_value(key, value);
    if (v < 1) {
        throw ConfigError(std::string(key) + ": must be >= 1");
    }
    return static_cast<std::size_t>(v);
}

// "none" and "all"/"auto" spell an empty optional
bool is_unset(std::string_view value) {
    return value == "none" || value == "all" || value == "auto";
}

template <typename T>
std::string optional_text(const std::optional<T>& v, std::string_view unset) {
    if (!v) return std::string(unset);
    if constexpr (std::is_floating_point_v<T>) {
        return format_double(*v);
    } else {
        return std::to_string(*v);
    }
}

} // namespace

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::lr: return "lr";
    case Algorithm::knn: return "knn";
    case Algorithm::rf: return "rf";
    case Algorithm::svm: return "svm";
    case Algorithm::dt: return "dt";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
    for (Algorithm a : kAllAlgorithms) {
        if (to_string(a) == text) return a;
    }
    throw ConfigError("unknown algorithm '" + std::string(text) + "' (expected lr|knn|rf|svm|dt)");
}

void TrainConfig::validate() const {
    if (!(lr.learning_rate > 0.0)) throw ConfigError("lr.learning_rate must be > 0");
    if (lr.iterations < 1) throw ConfigError("lr.iterations must be >= 1");
    if (knn.k < 1 || knn.k % 2 == 0) throw ConfigError("knn.k must be odd and >= 1");
    if (dt.min_samples_split < 2) throw ConfigError("dt.min_samples_split must be >= 2");
    if (dt.max_depth && *dt.max_depth < 0) throw ConfigError("dt.max_depth must be >= 0");
    if (dt.max_features && *dt.max_features < 1) throw ConfigError("dt.max_features must be >= 1");
    if (rf.n_trees < 1) throw ConfigError("rf.n_trees must be >= 1");
    if (rf.min_samples_split < 2) throw ConfigError("rf.min_samples_split must be >= 2");
    if (rf.max_depth && *rf.max_depth < 0) throw ConfigError("rf.max_depth must be >= 0");
    if (rf.max_features && *rf.max_features < 1) throw ConfigError("rf.max_features must be >= 1");
    if (!(svm.c > 0.0)) throw ConfigError("svm.c must be > 0");
    if (svm.gamma && !(*svm.gamma > 0.0)) throw ConfigError("svm.gamma must be > 0");
    if (!(svm.tol > 0.0)) throw ConfigError("svm.tol must be > 0");
    if (svm.max_passes < 1) throw ConfigError("svm.max_passes must be >= 1");
}

std::vector<std::pair<std::string, std::string>> TrainConfig::to_key_values() const {
    return {
        {"lr.learning_rate", format_double(lr.learning_rate)},
        {"lr.iterations", std::to_string(lr.iterations)},
        {"knn.k", std::to_string(knn.k)},
        {"dt.min_samples_split", std::to_string(dt.min_samples_split)},
        {"dt.max_depth", optional_text(dt.max_depth, "none")},
        {"dt.max_features", optional_text(dt.max_features, "all")},
        {"rf.n_trees", std::to_string(rf.n_trees)},
        {"rf.max_features", optional_text(rf.max_features, "auto")},
        {"rf.bootstrap", rf.bootstrap ? "true" : "false"},
        {"rf.min_samples_split", std::to_string(rf.min_samples_split)},
        {"rf.max_depth", optional_text(rf.max_depth, "none")},
        {"svm.c", format_double(svm.c)},
        {"svm.gamma", optional_text(svm.gamma, "auto")},
        {"svm.tol", format_double(svm.tol)},
        {"svm.max_passes", std::to_string(svm.max_passes)},
    };
}

bool TrainConfig::set(std::string_view key, std::string_view value) {
    if (key == "lr.learning_rate") lr.learning_rate = real_value(key, value);
    else if (key == "lr.iterations") lr.iterations = static_cast<int>(int_value(key, value));
    else if (key == "knn.k") knn.k = static_cast<int>(int_value(key, value));
    else if (key == "dt.min_samples_split") dt.min_samples_split = count_value(key, value);
    else if (key == "dt.max_depth") {
        dt.max_depth = is_unset(value) ? std::nullopt : std::optional<int>(static_cast<int>(int_value(key, value)));
    } else if (key == "dt.max_features") {
        dt.max_features = is_unset(value) ? std::nullopt : std::optional<std::size_t>(count_value(key, value));
    } else if (key == "rf.n_trees") rf.n_trees = static_cast<int>(int_value(key, value));
    else if (key == "rf.max_features") {
        rf.max_features = is_unset(value) ? std::nullopt : std::optional<std::size_t>(count_value(key, value));
    } else if (key == "rf.bootstrap") {
        if (value == "true" || value == "1") rf.bootstrap = true;
        else if (value == "false" || value == "0") rf.bootstrap = false;
        else throw ConfigError("rf.bootstrap: expected true|false");
    } else if (key == "rf.min_samples_split") rf.min_samples_split = count_value(key, value);
    else if (key == "rf.max_depth") {
        rf.max_depth = is_unset(value) ? std::nullopt : std::optional<int>(static_cast<int>(int_value(key, value)));
    } else if (key == "svm.c") svm.c = real_value(key, value);
    else if (key == "svm.gamma") {
        svm.gamma = is_unset(value) ? std::nullopt : std::optional<double>(real_value(key, value));
    } else if (key == "svm.tol") svm.tol = real_value(key, value);
    else if (key == "svm.max_passes") svm.max_passes = static_cast<int>(int_value(key, value));
    else return false;
    return true;
}

} // namespace rssiprox::ml
