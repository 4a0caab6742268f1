#include "minersel/cli.hpp"

#include <filesystem>
#include <optional>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "minersel/config.hpp"
#include "minersel/errors.hpp"
#include "minersel/experiment.hpp"
#include "minersel/io.hpp"
#include "minersel/metrics.hpp"

namespace minersel {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config;
    std::string instance;
    std::string algorithm;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::optional<std::size_t> runs;
    std::optional<std::size_t> threads;
    std::string table;
};

int cmd_generate(const Options& o, std::ostream& out) {
    GenerateSpec spec;
    if (!o.config.empty()) spec = generate_spec_from_json(read_json_file(o.config));
    if (o.seed) spec.generator.seed = *o.seed;
    const Instance instance = generate_instance(spec.generator, spec.objectives);
    save_instance(instance, o.out);
    fmt::print(out, "generated {} miners, {} blocks (seed {})\n", instance.size(), instance.total_blocks(),
               instance.seed());
    fmt::print(out, "total energy {} kWh/day, total reputation {}\n", instance.total_energy_kwh(),
               instance.total_reputation());
    fmt::print(out, "wrote {}\n", o.out);
    return kExitOk;
}

int cmd_optimize(const Options& o, std::ostream& out, std::ostream& err) {
    const Algorithm algorithm = parse_algorithm(o.algorithm);
    AlgorithmConfig cfg;
    if (!o.config.empty()) cfg = algorithm_config_from_json(read_json_file(o.config));
    if (o.seed) cfg.seed = *o.seed;
    const Instance instance = load_instance(o.instance);
    for (const auto& w : instance.warnings()) fmt::print(err, "warning: {}\n", w);

    const RunResult result = run_algorithm(algorithm, instance, cfg);
    write_front_csv(o.out, result.front, instance);
    fmt::print(out, "{}: seed {}, {} evaluations, {} front members, hypervolume {}\n", result.algorithm,
               result.seed, result.evaluations, result.front.size(), per_run_hypervolume(result, instance));
    fmt::print(out, "wrote {} ({:.2f} s)\n", o.out, result.seconds);
    return kExitOk;
}

int cmd_experiment(const Options& o, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    if (!o.config.empty())
        cfg = experiment_config_from_json(read_json_file(o.config), fs::path(o.config).parent_path());
    if (o.runs) cfg.runs_per_algorithm = *o.runs;
    if (o.seed) cfg.base_seed = *o.seed;
    if (!o.out.empty()) cfg.output_dir = o.out;
    if (o.threads) cfg.threads = *o.threads;
    cfg.validate();

    const Instance instance = resolve_instance(cfg);
    for (const auto& w : instance.warnings()) fmt::print(err, "warning: {}\n", w);
    const ExperimentSummary summary = run_experiment(cfg, instance);
    write_experiment(cfg.output_dir, instance, summary);

    for (const auto& ar : summary.algorithms) {
        auto hv = ar.hypervolumes();
        std::sort(hv.begin(), hv.end());
        const double median = hv.size() % 2 ? hv[hv.size() / 2] : 0.5 * (hv[hv.size() / 2 - 1] + hv[hv.size() / 2]);
        fmt::print(out, "{:<8} runs {:>4}  median hv {:.6f}  merged front {}\n", algorithm_name(ar.algorithm),
                   ar.runs.size(), median, ar.merged.size());
    }
    out << stats_csv(summary.reports);
    fmt::print(out, "wrote {}\n", cfg.output_dir.string());
    return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const auto rows = read_hypervolume_csv(o.table);
    const std::string report = stats_csv(pairwise_reports(rows));
    out << report;
    fs::path target = o.out.empty() ? fs::path(o.table).replace_extension(".stats.csv") : fs::path(o.out);
    write_text_file(target, report);
    fmt::print(out, "wrote {}\n", target.string());
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy-aware miner selection with multi-objective evolutionary algorithms", "minersel"};
    app.require_subcommand(1);
    Options o;

    auto* generate = app.add_subcommand("generate", "Generate a synthetic miner instance");
    generate->add_option("--config", o.config, "Generator config (JSON)")->check(CLI::ExistingFile);
    generate->add_option("--seed", o.seed, "Override the generator seed");
    generate->add_option("--out", o.out, "Instance file to write")->required();

    auto* optimize = app.add_subcommand("optimize", "Run one algorithm on an instance");
    optimize->add_option("--instance", o.instance, "Instance file")->required();
    optimize->add_option("--algorithm", o.algorithm, "nsga2, spea2 or random")->required();
    optimize->add_option("--config", o.config, "Algorithm config (JSON)")->check(CLI::ExistingFile);
    optimize->add_option("--seed", o.seed, "Run seed");
    optimize->add_option("--out", o.out, "Front file to write")->required();

    auto* experiment = app.add_subcommand("experiment", "Run the full multi-algorithm comparison");
    experiment->add_option("--config", o.config, "Experiment config (JSON)")->check(CLI::ExistingFile);
    experiment->add_option("--runs", o.runs, "Runs per algorithm");
    experiment->add_option("--seed", o.seed, "Base seed");
    experiment->add_option("--out", o.out, "Output directory");
    experiment->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto* stats = app.add_subcommand("stats", "Pairwise rank-sum tests over a hypervolume table");
    stats->add_option("table", o.table, "Hypervolume table (CSV)")->required();
    stats->add_option("--out", o.out, "Report file (default: <table>.stats.csv)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(o, out);
        if (optimize->parsed()) return cmd_optimize(o, out, err);
        if (experiment->parsed()) return cmd_experiment(o, out, err);
        if (stats->parsed()) return cmd_stats(o, out);
    } catch (const ConfigError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const ParseError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}

} // namespace minersel
