#include "rssiprox/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "rssiprox/common.hpp"
#include "rssiprox/dataset.hpp"
#include "rssiprox/features.hpp"
#include "rssiprox/simulator.hpp"
#include "rssiprox/trace_io.hpp"

namespace rssiprox::cli {

namespace fs = std::filesystem;

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    std::optional<std::string> algorithm;
    std::vector<std::string> overrides;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key=value config file");
    cmd->add_option("--seed", flags.seed, "top-level seed (default 42)");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--algorithm", flags.algorithm, "lr|knn|rf|svm|dt");
    cmd->add_option("--set", flags.overrides, "override a config key (key=value), repeatable");
}

// defaults < config file < --set < dedicated flags
RunConfig resolve(const CommonFlags& flags) {
    RunConfig config;
    if (!flags.config_path.empty()) {
        apply_config_file(config, flags.config_path);
    }
    for (const auto& kv : flags.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        }
        config.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (flags.seed) config.seed = *flags.seed;
    if (flags.algorithm) config.set("algorithm", *flags.algorithm);
    config.validate();
    return config;
}

std::vector<std::string> comment_lines(const KeyValues& kv) {
    std::vector<std::string> out;
    out.reserve(kv.size());
    for (const auto& [k, v] : kv) out.push_back(k + "=" + v);
    return out;
}

void write_file(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << contents;
    if (!out) {
        throw InputError("failed writing '" + path.string() + "'");
    }
    std::cout << "wrote " << path.string() << '\n';
}

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return in;
}

std::string traces_text(const std::vector<PointRecord>& points, const RunConfig& config) {
    std::ostringstream os;
    const auto comments = comment_lines(config.effective());
    write_traces(os, points, comments);
    return os.str();
}

std::string features_text(const Dataset& ds, const RunConfig& config) {
    std::ostringstream os;
    const auto comments = comment_lines(config.effective());
    write_feature_matrix(os, ds, comments);
    return os.str();
}

std::string report_text(const eval::EvalReport& report, const RunConfig& config) {
    return report_to_json(report, config.effective()).dump(2) + "\n";
}

FeatureTable load_features(const fs::path& path) {
    auto in = open_input(path);
    return read_feature_matrix(in);
}

std::string importance_text(const std::vector<double>& importance) {
    std::string out = "feature,importance\n";
    for (std::size_t f = 0; f < importance.size(); ++f) {
        out += std::string(feature_names()[f]) + "," + format_double(importance[f]) + "\n";
    }
    return out;
}

std::string kde_text(const FeatureTable& table) {
    std::string out = "feature,class,x,density\n";
    for (const auto& curve : eval::kde_curves(table.x, table.y)) {
        const std::string prefix = std::string(feature_names()[curve.feature]) + "," + std::to_string(curve.label) + ",";
        for (std::size_t i = 0; i < curve.grid.size(); ++i) {
            out += prefix + format_double(curve.grid[i]) + "," + format_double(curve.density[i]) + "\n";
        }
    }
    return out;
}

double mean(const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

int cmd_simulate(const CommonFlags& flags) {
    const RunConfig config = resolve(flags);
    write_file(fs::path(flags.out_dir) / "traces.csv", traces_text(simulate_stage(config), config));
    return kExitOk;
}

int cmd_featurize(const CommonFlags& flags, const std::string& traces_path) {
    const RunConfig config = resolve(flags);
    auto in = open_input(traces_path);
    const auto points = ingest_traces(in);
    write_file(fs::path(flags.out_dir) / "features.csv", features_text(featurize_stage(points, config), config));
    return kExitOk;
}

int cmd_train(const CommonFlags& flags, const std::string& features_path) {
    const RunConfig config = resolve(flags);
    const FeatureTable table = load_features(features_path);
    const auto trained = eval::fit_holdout(table.x, table.y, config.train_config(), config.eval_seed(), config.eval);
    nlohmann::json doc = eval::trained_to_json(trained);
    nlohmann::json echo = nlohmann::json::object();
    for (const auto& [k, v] : config.effective()) echo[k] = v;
    doc["run_config"] = std::move(echo);
    write_file(fs::path(flags.out_dir) / "model.json", doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_evaluate(const CommonFlags& flags, const std::string& features_path, const std::string& model_path,
                 bool want_importance, bool want_kde) {
    RunConfig config = resolve(flags);
    const FeatureTable table = load_features(features_path);

    std::optional<eval::TrainedModel> trained;
    if (!model_path.empty()) {
        auto in = open_input(model_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("model '" + model_path + "': " + e.what());
        }
        trained = eval::trained_from_json(doc);
        const std::uint64_t top_seed = config.seed;
        config.train = trained->model.config();
        config.seed = top_seed;
    }
    if (want_importance && config.train.algorithm != ml::Algorithm::rf) {
        throw ConfigError("--importance requires --algorithm rf");
    }

    if (!trained) {
        trained = eval::fit_holdout(table.x, table.y, config.train_config(), config.eval_seed(), config.eval);
    }
    const auto report = eval::score_holdout(*trained, table.x, table.y, config.eval_seed(), config.eval);

    const fs::path out = flags.out_dir;
    write_file(out / "report.json", report_text(report, config));
    if (want_importance) {
        write_file(out / "importance.csv", importance_text(*report.importance));
    }
    if (want_kde) {
        write_file(out / "kde.csv", kde_text(table));
    }
    return kExitOk;
}

int cmd_benchmark(const CommonFlags& flags) {
    const RunConfig base = resolve(flags);
    const fs::path out = flags.out_dir;

    const auto points = simulate_stage(base);
    write_file(out / "traces.csv", traces_text(points, base));
    const Dataset ds = featurize_stage(points, base);
    write_file(out / "features.csv", features_text(ds, base));

    const auto [x, y] = eval::to_matrix(ds);
    const FeatureTable table{x, y};

    std::ostringstream table_csv;
    table_csv << "algorithm,accuracy,f1_class0,f1_class1,cv_mean_accuracy\n";
    std::ostringstream pretty;
    pretty << std::left << std::setw(10) << "algorithm" << std::setw(10) << "accuracy" << std::setw(10) << "f1_0"
           << std::setw(10) << "f1_1" << "cv_mean\n";
    for (ml::Algorithm algorithm : ml::kAllAlgorithms) {
        RunConfig config = base;
        config.train.algorithm = algorithm;
        const auto report = evaluate_stage(table, config);
        const std::string name(ml::to_string(algorithm));
        write_file(out / ("report_" + name + ".json"), report_text(report, config));
        table_csv << name << ',' << format_double(report.accuracy) << ',' << format_double(report.f1_class0) << ','
                  << format_double(report.f1_class1) << ',' << format_double(mean(report.cv_accuracies)) << '\n';
        pretty << std::left << std::fixed << std::setprecision(3) << std::setw(10) << name << std::setw(10)
               << report.accuracy << std::setw(10) << report.f1_class0 << std::setw(10) << report.f1_class1
               << mean(report.cv_accuracies) << '\n';
    }
    write_file(out / "benchmark.csv", table_csv.str());
    std::cout << pretty.str();
    return kExitOk;
}

void print_error(int code, std::string_view kind, const std::string& message) {
    std::cerr << "error: code=" << code << " kind=" << kind << " message=" << nlohmann::json(message).dump() << '\n';
}

} // namespace

std::vector<PointRecord> simulate_stage(const RunConfig& config) {
    return generate(config.sim_config());
}

Dataset featurize_stage(const std::vector<PointRecord>& points, const RunConfig& config) {
    return build_pairs(points, config.pairing, config.pairing_seed());
}

eval::EvalReport evaluate_stage(const FeatureTable& table, const RunConfig& config) {
    return eval::evaluate(table.x, table.y, config.train_config(), config.eval_seed(), config.eval);
}

int run(int argc, char** argv) {
    CLI::App app{"RSSI room-adjacency toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input_path;
    std::string model_path;
    bool want_importance = false;
    bool want_kde = false;

    auto* simulate = app.add_subcommand("simulate", "generate synthetic RSSI traces (traces.csv)");
    add_common_flags(simulate, flags);

    auto* featurize = app.add_subcommand("featurize", "build the labeled pair feature matrix (features.csv)");
    add_common_flags(featurize, flags);
    featurize->add_option("traces", input_path, "trace CSV")->required();

    auto* train_cmd = app.add_subcommand("train", "train a classifier on the holdout split (model.json)");
    add_common_flags(train_cmd, flags);
    train_cmd->add_option("features", input_path, "feature CSV")->required();

    auto* evaluate = app.add_subcommand("evaluate", "holdout metrics and cross-validation (report.json)");
    add_common_flags(evaluate, flags);
    evaluate->add_option("features", input_path, "feature CSV")->required();
    evaluate->add_option("--model", model_path, "score this model.json instead of training");
    evaluate->add_flag("--importance", want_importance, "write importance.csv (rf only)");
    evaluate->add_flag("--kde", want_kde, "write class-conditional densities (kde.csv)");

    auto* benchmark = app.add_subcommand("benchmark", "simulate, featurize and evaluate all five classifiers");
    add_common_flags(benchmark, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error(kExitConfig, "config", e.what());
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(flags);
        if (featurize->parsed()) return cmd_featurize(flags, input_path);
        if (train_cmd->parsed()) return cmd_train(flags, input_path);
        if (evaluate->parsed()) return cmd_evaluate(flags, input_path, model_path, want_importance, want_kde);
        if (benchmark->parsed()) return cmd_benchmark(flags);
    } catch (const InputError& e) {
        print_error(kExitInput, "input", e.what());
        return kExitInput;
    } catch (const fs::filesystem_error& e) {
        print_error(kExitInput, "input", e.what());
        return kExitInput;
    } catch (const ConfigError& e) {
        print_error(kExitConfig, "config", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        print_error(kExitRuntime, "runtime", e.what());
        return kExitRuntime;
    }
    return kExitRuntime;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> storage = args;
    std::vector<char*> argv;
    argv.reserve(storage.size() + 1);
    for (auto& s : storage) argv.push_back(s.data());
    argv.push_back(nullptr);
    return run(static_cast<int>(storage.size()), argv.data());
}

} // namespace rssiprox::cli
