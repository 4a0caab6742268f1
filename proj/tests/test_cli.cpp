#include <doctest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include <json.hpp>

#include "minersel/cli.hpp"
#include "minersel/config.hpp"
#include "minersel/errors.hpp"
#include "minersel/experiment.hpp"
#include "minersel/io.hpp"
#include "minersel/metrics.hpp"
#include "oracles.hpp"

using namespace minersel;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "minersel_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = read_text_file(e.path());
    return files;
}

void write_json(const fs::path& p, const nlohmann::json& j) { write_text_file(p, j.dump(2)); }

std::size_t data_rows(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) - 1;
}

} // namespace

TEST_CASE("generate") {
    const auto dir = scratch("generate");
    const auto a = dir / "a.json", b = dir / "b.json";
    auto r = cli({"generate", "--out", a.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("160 miners") != std::string::npos);
    const auto doc = nlohmann::json::parse(read_text_file(a));
    CHECK(doc["miners"].size() == 160);
    CHECK(doc["header"]["total_blocks"] == 4073);
    REQUIRE(cli({"generate", "--out", b.string()}).code == kExitOk);
    CHECK(read_text_file(a) == read_text_file(b));

    REQUIRE(cli({"generate", "--seed", "77", "--out", b.string()}).code == kExitOk);
    CHECK(read_text_file(a) != read_text_file(b));
    CHECK(load_instance(b).seed() == 77);

    const auto cfg = dir / "zero.json";
    write_json(cfg, {{"n_miners", 0}});
    r = cli({"generate", "--config", cfg.string(), "--out", (dir / "c.json").string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("n_miners") != std::string::npos);

    write_json(cfg, {{"n_miner", 10}});
    CHECK(cli({"generate", "--config", cfg.string(), "--out", (dir / "c.json").string()}).code == kExitUsage);
    CHECK(cli({"generate"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("optimize") {
    const auto dir = scratch("optimize");
    const auto inst = dir / "inst.json";
    const auto gen = dir / "gen.json";
    write_json(gen, {{"n_miners", 30}, {"n_blocks", 900}, {"seed", 3}});
    REQUIRE(cli({"generate", "--config", gen.string(), "--out", inst.string()}).code == kExitOk);

    const auto one = dir / "one.json";
    write_json(one, {{"evaluation_budget", 1}});
    auto r = cli({"optimize", "--instance", inst.string(), "--algorithm", "random", "--config", one.string(),
                  "--seed", "4", "--out", (dir / "rs.csv").string()});
    REQUIRE(r.code == kExitOk);
    CHECK(read_front_csv(dir / "rs.csv").size() == 1);

    const auto budget = dir / "budget.json";
    write_json(budget, {{"evaluation_budget", 3000}, {"population_size", 40}, {"archive_size", 40}});
    for (const char* alg : {"nsga2", "spea2", "random"}) {
        CAPTURE(alg);
        const auto p1 = dir / (std::string(alg) + "_1.csv");
        const auto p2 = dir / (std::string(alg) + "_2.csv");
        REQUIRE(cli({"optimize", "--instance", inst.string(), "--algorithm", alg, "--config", budget.string(),
                     "--seed", "9", "--out", p1.string()}).code == kExitOk);
        REQUIRE(cli({"optimize", "--instance", inst.string(), "--algorithm", alg, "--config", budget.string(),
                     "--seed", "9", "--out", p2.string()}).code == kExitOk);
        CHECK(read_text_file(p1) == read_text_file(p2));

        // independent filter over the rows read back
        const auto rows = read_front_csv(p1);
        std::vector<ObjectiveVector> objs;
        for (const auto& row : rows) objs.push_back(row.objectives);
        CHECK(oracle::pareto_set(objs).size() == rows.size());
        const Instance loaded = load_instance(inst);
        for (const auto& row : rows) CHECK(evaluate(row.mask, loaded) == row.objectives);
    }

    r = cli({"optimize", "--instance", inst.string(), "--algorithm", "moead", "--out", (dir / "x.csv").string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("unknown algorithm") != std::string::npos);
    r = cli({"optimize", "--instance", (dir / "missing.json").string(), "--algorithm", "nsga2", "--out",
             (dir / "x.csv").string()});
    CHECK(r.code == kExitRuntime);
}

TEST_CASE("experiment with a single algorithm") {
    const auto dir = scratch("experiment_single");
    const auto cfg = dir / "exp.json";
    write_json(cfg, {{"instance", {{"generate", {{"n_miners", 20}, {"n_blocks", 500}}}}},
                     {"algorithms", {"random"}},
                     {"runs_per_algorithm", 2},
                     {"algorithm_config", {{"evaluation_budget", 500}}},
                     {"output_dir", "out"}});
    const auto r = cli({"experiment", "--config", cfg.string()});
    REQUIRE(r.code == kExitOk);
    const auto out = dir / "out";
    CHECK(data_rows(read_text_file(out / "hypervolume.csv")) == 2);
    CHECK(read_text_file(out / "stats.csv") == "pair,U,p,method,A12,verdict\n");
    CHECK(fs::exists(out / "runs" / "random_run000.csv"));
    CHECK(fs::exists(out / "runs" / "random_run001.csv"));
    CHECK(fs::exists(out / "plot_data.csv"));
}

TEST_CASE("experiment outputs are consistent with the stored fronts") {
    const auto dir = scratch("experiment_full");
    ExperimentConfig cfg;
    GenerateSpec spec;
    spec.generator.n_miners = 25;
    spec.generator.n_blocks = 700;
    cfg.instance_source = spec;
    cfg.runs_per_algorithm = 4;
    for (auto* c : {&cfg.nsga2, &cfg.spea2, &cfg.random}) {
        c->evaluation_budget = 1500;
        c->population_size = 30;
        c->archive_size = 30;
    }
    cfg.threads = 3;
    const Instance inst = resolve_instance(cfg);
    const auto summary = run_experiment(cfg, inst);
    write_experiment(dir, inst, summary);

    CHECK(load_instance(dir / "instance.json") == inst);
    const auto table = read_hypervolume_csv(dir / "hypervolume.csv");
    REQUIRE(table.size() == 12);
    for (const auto& row : table) {
        const auto rows = read_front_csv(dir / "runs" / run_file_name(parse_algorithm(row.algorithm), row.run));
        std::vector<NormalizedPoint> pts;
        for (const auto& fr : rows) pts.push_back(fr.point);
        CHECK(hypervolume_2d(pts) == row.hypervolume);
        CHECK(row.seed == cfg.base_seed + row.run);
    }

    for (const auto& ar : summary.algorithms) {
        std::vector<FrontSet> fronts;
        for (std::size_t run = 0; run < cfg.runs_per_algorithm; ++run) {
            FrontSet f;
            for (const auto& fr : read_front_csv(dir / "runs" / run_file_name(ar.algorithm, run)))
                f.insert({fr.mask, fr.objectives});
            fronts.push_back(f);
        }
        const auto merged = merge_fronts(fronts);
        const auto stored = read_front_csv(dir / "fronts" / (std::string(algorithm_name(ar.algorithm)) + "_merged.csv"));
        REQUIRE(stored.size() == merged.size());
        for (std::size_t k = 0; k < stored.size(); ++k) CHECK(stored[k].objectives == merged.members()[k].objectives);
    }
    const auto stats = read_text_file(dir / "stats.csv");
    CHECK(data_rows(stats) == 3);
    CHECK(stats.find("nsga2-vs-spea2") != std::string::npos);
    CHECK(stats.find("spea2-vs-random") != std::string::npos);

    // the thread count does not change anything
    cfg.threads = 1;
    const auto dir1 = scratch("experiment_full_serial");
    write_experiment(dir1, inst, run_experiment(cfg, inst));
    CHECK(snapshot(dir) == snapshot(dir1));
}

TEST_CASE("stats") {
    const auto dir = scratch("stats");
    const auto table = dir / "hv.csv";

    write_text_file(table, "algorithm,run,seed,hypervolume\na,0,1,1\na,1,2,2\na,2,3,3\nb,0,1,4\nb,1,2,5\nb,2,3,6\n");
    auto r = cli({"stats", table.string(), "--out", (dir / "r1.csv").string()});
    REQUIRE(r.code == kExitOk);
    CHECK(read_text_file(dir / "r1.csv") == "pair,U,p,method,A12,verdict\na-vs-b,0,0.1,exact,0,not-significant\n");

    write_text_file(table, "algorithm,run,seed,hypervolume\na,0,1,0.5\na,1,2,0.7\nb,0,1,0.5\nb,1,2,0.7\n");
    REQUIRE(cli({"stats", table.string(), "--out", (dir / "r2.csv").string()}).code == kExitOk);
    const auto reports = pairwise_reports(read_hypervolume_csv(table));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].test.p_value == 1.0);
    CHECK(reports[0].test.a12 == 0.5);

    write_text_file(table, "algorithm,run,seed,hypervolume\na,0,1,0.5\n");
    r = cli({"stats", table.string()});
    CHECK(r.code == kExitOk);
    CHECK(read_text_file(dir / "hv.stats.csv") == "pair,U,p,method,A12,verdict\n");

    write_text_file(table, "algorithm,run,seed,hypervolume\na,0,1,0.5\na,x,2,0.7\n");
    r = cli({"stats", table.string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("experiment config parsing") {
    using nlohmann::json;
    const auto cfg = experiment_config_from_json(
        json{{"instance", {{"path", "inst.json"}}},
             {"algorithms", {"spea2", "nsga2"}},
             {"objectives", {{"reputation_weight", 0.7}}},
             {"algorithm_config", {{"evaluation_budget", 5000}}},
             {"algorithm_overrides", {{"spea2", {{"archive_size", 50}}}}}},
        "/data");
    CHECK(std::get<fs::path>(cfg.instance_source) == fs::path("/data/inst.json"));
    CHECK(cfg.algorithms == std::vector<Algorithm>{Algorithm::spea2, Algorithm::nsga2});
    CHECK(cfg.objectives->reputation_weight == 0.7);
    CHECK(cfg.spea2.archive_size == 50);
    CHECK(cfg.spea2.evaluation_budget == 5000);
    CHECK(cfg.nsga2.archive_size == 100);

    CHECK_THROWS_AS(experiment_config_from_json(json{{"algorithms", json::array()}}), ConfigError);
    CHECK_THROWS_AS(experiment_config_from_json(json{{"runs_per_algorithm", 0}}), ConfigError);
    CHECK_THROWS_AS(experiment_config_from_json(json{{"algorithms", {"nsga2", "nsga2"}}}), ConfigError);
    CHECK_THROWS_AS(experiment_config_from_json(json{{"bogus", 1}}), ConfigError);
    CHECK_THROWS_AS(algorithm_config_from_json(json{{"crossover_rate", 2.0}}), ConfigError);
    CHECK_FALSE(algorithm_config_from_json(json{{"mutation_rate", nullptr}}).mutation_rate.has_value());
}

TEST_CASE("front files reject dominated rows") {
    CHECK_THROWS_AS(parse_front_csv("mask,energy_kwh,reputation,f1,f2\n10,1,2,0.1,0.2\n01,2,1,0.2,0.3\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_front_csv("mask,energy_kwh,reputation,f1,f2\n10,1,2,0.1\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK(parse_front_csv("mask,energy_kwh,reputation,f1,f2\n10,1,1,0.1,0.9\n01,2,2,0.2,0.8\n").size() == 2);
}
