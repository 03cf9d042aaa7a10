#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rssiprox/cli/commands.hpp"
#include "rssiprox/cli/run_config.hpp"
#include "rssiprox/common.hpp"
#include "rssiprox/trace_io.hpp"

namespace fs = std::filesystem;
using namespace rssiprox;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("rssiprox_cli_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Captured {
    int code = 0;
    std::string out;
    std::string err;
};

Captured run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rssiprox");
    std::ostringstream out;
    std::ostringstream err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = cli::run(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

} // namespace

TEST_CASE("simulate then featurize gives 300 rows of 19 columns") {
    TempDir dir("featurize");
    REQUIRE(run_cli({"simulate", "--seed", "5", "--out", dir.path.string()}).code == 0);
    const auto traces = data_lines(slurp(dir / "traces.csv"));
    CHECK(traces.front() == kTraceHeader);
    CHECK(traces.size() == 4801);

    const auto r = run_cli({"featurize", dir / "traces.csv", "--seed", "5", "--out", dir.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("features.csv") != std::string::npos);
    const auto rows = data_lines(slurp(dir / "features.csv"));
    REQUIRE(rows.size() == 301);
    std::size_t positives = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 18);
        positives += rows[i][0] == '1' ? 1 : 0;
    }
    CHECK(positives == 100);
}

TEST_CASE("evaluate with importance") {
    TempDir dir("importance");
    REQUIRE(run_cli({"simulate", "--out", dir.path.string()}).code == 0);
    REQUIRE(run_cli({"featurize", dir / "traces.csv", "--out", dir.path.string()}).code == 0);
    const auto r = run_cli({"evaluate", dir / "features.csv", "--algorithm", "rf", "--importance", "--kde", "--out",
                            dir.path.string()});
    REQUIRE(r.code == 0);
    const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(report["algorithm"] == "rf");
    const auto imp = report["importance"].get<std::vector<double>>();
    REQUIRE(imp.size() == 18);
    for (double v : imp) CHECK(v >= 0.0);
    CHECK(std::abs(std::accumulate(imp.begin(), imp.end(), 0.0) - 1.0) <= 1e-9);
    CHECK(report["cv_accuracies"].size() == 10);
    CHECK(report["confusion"]["tp"].get<int>() + report["confusion"]["fp"].get<int>() +
              report["confusion"]["fn"].get<int>() + report["confusion"]["tn"].get<int>() ==
          75);
    CHECK(data_lines(slurp(dir / "importance.csv")).size() == 19);
    const auto kde_rows = data_lines(slurp(dir / "kde.csv"));
    CHECK(kde_rows.front() == "feature,class,x,density");
    CHECK(kde_rows.size() > 1);
}

TEST_CASE("train then evaluate a saved model") {
    TempDir dir("model");
    REQUIRE(run_cli({"simulate", "--out", dir.path.string()}).code == 0);
    REQUIRE(run_cli({"featurize", dir / "traces.csv", "--out", dir.path.string()}).code == 0);
    REQUIRE(run_cli({"train", dir / "features.csv", "--algorithm", "dt", "--out", dir.path.string()}).code == 0);
    const auto model = nlohmann::json::parse(slurp(dir / "model.json"));
    CHECK(model.contains("standardizer"));
    CHECK(model["run_config"]["algorithm"] == "dt");

    const fs::path a = dir.path / "a";
    const fs::path b = dir.path / "b";
    REQUIRE(run_cli({"evaluate", dir / "features.csv", "--model", dir / "model.json", "--out", a.string()}).code == 0);
    REQUIRE(run_cli({"evaluate", dir / "features.csv", "--algorithm", "dt", "--out", b.string()}).code == 0);
    const auto ra = nlohmann::json::parse(slurp((a / "report.json").string()));
    const auto rb = nlohmann::json::parse(slurp((b / "report.json").string()));
    CHECK(ra["algorithm"] == "dt");
    CHECK(ra["accuracy"] == rb["accuracy"]);
    CHECK(ra["confusion"] == rb["confusion"]);
}

TEST_CASE("error exit codes") {
    TempDir dir("errors");
    auto r = run_cli({"featurize", dir / "missing.csv", "--out", dir.path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: code=2 kind=input message=\"", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    {
        std::ofstream bad(dir / "bad.csv");
        bad << kTraceHeader << "\n1,2,3\n";
    }
    r = run_cli({"featurize", dir / "bad.csv", "--out", dir.path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    CHECK(run_cli({"simulate", "--algorithm", "xgboost", "--out", dir.path.string()}).code == 3);
    CHECK(run_cli({"simulate", "--set", "sim.gamma=-1", "--out", dir.path.string()}).code == 3);
    CHECK(run_cli({"simulate", "--set", "bogus.key=1", "--out", dir.path.string()}).code == 3);
    CHECK(run_cli({"simulate", "--config", dir / "nope.cfg", "--out", dir.path.string()}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 3);

    REQUIRE(run_cli({"simulate", "--out", dir.path.string()}).code == 0);
    REQUIRE(run_cli({"featurize", dir / "traces.csv", "--out", dir.path.string()}).code == 0);
    r = run_cli({"evaluate", dir / "features.csv", "--algorithm", "lr", "--importance", "--out", dir.path.string()});
    CHECK(r.code == 3);
    // more positives than distinct (pair, trial) combinations exist
    r = run_cli({"featurize", dir / "traces.csv", "--set", "pairs.n_positive=100000", "--out", dir.path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error: code=1 kind=runtime", 0) == 0);
}

TEST_CASE("config layering") {
    TempDir dir("layering");
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "# comment\nseed = 9\nsim.trials=3\nalgorithm=knn\n";
    }
    cli::RunConfig rc;
    cli::apply_config_file(rc, dir / "run.cfg");
    CHECK(rc.seed == 9);
    CHECK(rc.sim.trials == 3);
    CHECK(rc.train.algorithm == ml::Algorithm::knn);

    REQUIRE(run_cli({"simulate", "--config", dir / "run.cfg", "--set", "sim.trials=2", "--seed", "4", "--out",
                     dir.path.string()})
                .code == 0);
    const auto text = slurp(dir / "traces.csv");
    CHECK(text.find("# seed=4\n") != std::string::npos);
    CHECK(text.find("# sim.trials=2\n") != std::string::npos);
    CHECK(text.find("# algorithm=knn\n") != std::string::npos);
    CHECK(data_lines(text).size() == 1 + 20 * 3 * 2 * 8);

    std::istringstream bad("no equals sign\n");
    cli::RunConfig other;
    CHECK_THROWS_AS(cli::apply_config_stream(other, bad), ConfigError);
}

TEST_CASE("benchmark reruns are byte-identical and match the stage commands") {
    TempDir dir("benchmark");
    const fs::path a = dir.path / "a";
    const fs::path b = dir.path / "b";
    const fs::path m = dir.path / "manual";
    REQUIRE(run_cli({"benchmark", "--seed", "42", "--out", a.string()}).code == 0);
    REQUIRE(run_cli({"benchmark", "--seed", "42", "--out", b.string()}).code == 0);
    const std::vector<std::string> files{"traces.csv",     "features.csv",    "report_lr.json", "report_knn.json",
                                         "report_rf.json", "report_svm.json", "report_dt.json", "benchmark.csv"};
    for (const auto& f : files) {
        CAPTURE(f);
        const auto left = slurp((a / f).string());
        CHECK(!left.empty());
        CHECK(left == slurp((b / f).string()));
    }

    REQUIRE(run_cli({"simulate", "--seed", "42", "--out", m.string()}).code == 0);
    REQUIRE(run_cli({"featurize", (m / "traces.csv").string(), "--seed", "42", "--out", m.string()}).code == 0);
    REQUIRE(run_cli({"evaluate", (m / "features.csv").string(), "--seed", "42", "--algorithm", "svm", "--out",
                     m.string()})
                .code == 0);
    CHECK(slurp((m / "traces.csv").string()) == slurp((a / "traces.csv").string()));
    CHECK(slurp((m / "features.csv").string()) == slurp((a / "features.csv").string()));
    CHECK(slurp((m / "report.json").string()) == slurp((a / "report_svm.json").string()));
}
