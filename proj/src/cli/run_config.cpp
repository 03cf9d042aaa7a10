#include "rssiprox/cli/run_config.hpp"

#include <fstream>
#include <istream>

#include "rssiprox/common.hpp"
#include "rssiprox/rng.hpp"

namespace rssiprox::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t positive_count(std::string_view key, std::string_view value, bool allow_zero) {
    long long v = 0;
    try {
        v = parse_int(value);
    } catch (const InputError&) {
        throw ConfigError(std::string(key) + ": not an integer: '" + std::string(value) + "'");
    }
    if (v < 0 || (!allow_zero && v == 0)) {
        throw ConfigError(std::string(key) + ": out of range");
    }
    return static_cast<std::size_t>(v);
}

} // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
    if (key == "seed") {
        try {
            const long long v = parse_int(value);
            if (v < 0) throw ConfigError("seed must be non-negative");
            seed = static_cast<std::uint64_t>(v);
        } catch (const InputError&) {
            throw ConfigError("seed: not an integer: '" + std::string(value) + "'");
        }
    } else if (key == "algorithm") {
        train.algorithm = ml::parse_algorithm(value);
    } else if (key.starts_with("sim.")) {
        if (!sim.set(key.substr(4), value)) throw ConfigError("unknown config key '" + std::string(key) + "'");
    } else if (key == "pairs.n_positive") {
        pairing.n_positive = positive_count(key, value, true);
    } else if (key == "pairs.n_negative") {
        pairing.n_negative = positive_count(key, value, true);
    } else if (key == "pairs.trial_matching") {
        pairing.matching = parse_trial_matching(value);
    } else if (key == "eval.train_fraction") {
        try {
            eval.train_fraction = parse_double(value);
        } catch (const InputError&) {
            throw ConfigError("eval.train_fraction: not a number");
        }
    } else if (key == "eval.cv_folds") {
        eval.cv_folds = positive_count(key, value, false);
    } else if (!train.set(key, value)) {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

KeyValues RunConfig::effective() const {
    KeyValues out{{"seed", std::to_string(seed)}, {"algorithm", std::string(ml::to_string(train.algorithm))}};
    for (auto& [k, v] : sim.to_key_values()) out.emplace_back("sim." + k, v);
    out.emplace_back("pairs.n_positive", std::to_string(pairing.n_positive));
    out.emplace_back("pairs.n_negative", std::to_string(pairing.n_negative));
    out.emplace_back("pairs.trial_matching", std::string(to_string(pairing.matching)));
    for (auto& kv : train.to_key_values()) out.push_back(kv);
    out.emplace_back("eval.train_fraction", format_double(eval.train_fraction));
    out.emplace_back("eval.cv_folds", std::to_string(eval.cv_folds));
    return out;
}

SimConfig RunConfig::sim_config() const {
    SimConfig c = sim;
    c.seed = stage_seed(seed, "simulate");
    return c;
}

std::uint64_t RunConfig::pairing_seed() const { return stage_seed(seed, "featurize"); }

ml::TrainConfig RunConfig::train_config() const {
    ml::TrainConfig c = train;
    c.seed = stage_seed(seed, "train");
    return c;
}

std::uint64_t RunConfig::eval_seed() const { return stage_seed(seed, "evaluate"); }

void RunConfig::validate() const {
    sim.validate();
    train.validate();
    if (!(eval.train_fraction > 0.0 && eval.train_fraction < 1.0)) {
        throw ConfigError("eval.train_fraction must be in (0, 1)");
    }
    if (eval.cv_folds < 2) throw ConfigError("eval.cv_folds must be >= 2");
}

void apply_config_stream(RunConfig& config, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.starts_with('#')) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        try {
            config.set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open config file '" + path.string() + "'");
    }
    apply_config_stream(config, in);
}

} // namespace rssiprox::cli
