#include "minersel/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/core.h>

#include "minersel/metrics.hpp"

namespace minersel {

std::vector<double> AlgorithmResults::hypervolumes() const {
    std::vector<double> hv;
    hv.reserve(runs.size());
    for (const auto& r : runs) hv.push_back(r.hypervolume);
    return hv;
}

Instance resolve_instance(const ExperimentConfig& config) {
    Instance instance = std::visit(
        [](const auto& source) -> Instance {
            using T = std::decay_t<decltype(source)>;
            if constexpr (std::is_same_v<T, GenerateSpec>)
                return generate_instance(source.generator, source.objectives);
            else
                return load_instance(source);
        },
        config.instance_source);
    if (config.objectives) instance = instance.with_settings(*config.objectives);
    return instance;
}

std::string run_file_name(Algorithm algorithm, std::size_t run_index) {
    return fmt::format("{}_run{:03}.csv", algorithm_name(algorithm), run_index);
}

ExperimentSummary run_experiment(const ExperimentConfig& config, const Instance& instance) {
    config.validate();
    const std::size_t runs = config.runs_per_algorithm;

    ExperimentSummary summary;
    for (Algorithm a : config.algorithms) {
        AlgorithmResults ar{a, std::vector<RunRecord>(runs), {}};
        summary.algorithms.push_back(std::move(ar));
    }

    const std::size_t jobs = config.algorithms.size() * runs;
    std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, jobs);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string first_error;

    auto work = [&] {
        while (!failed) {
            const std::size_t job = next++;
            if (job >= jobs) return;
            const std::size_t a = job / runs;
            const std::size_t run = job % runs;
            const Algorithm algorithm = config.algorithms[a];
            try {
                AlgorithmConfig cfg = config.config_for(algorithm);
                cfg.seed = config.base_seed + run;
                RunRecord record;
                record.run_index = run;
                record.result = run_algorithm(algorithm, instance, cfg);
                record.hypervolume = per_run_hypervolume(record.result, instance);
                summary.algorithms[a].runs[run] = std::move(record);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (!failed.exchange(true))
                    first_error = fmt::format("{} run {}: {}", algorithm_name(algorithm), run, e.what());
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failed) throw std::runtime_error(first_error);

    for (auto& ar : summary.algorithms) {
        std::vector<FrontSet> fronts;
        for (const auto& r : ar.runs) {
            fronts.push_back(r.result.front);
            summary.hypervolume_table.push_back({std::string(algorithm_name(ar.algorithm)), r.run_index,
                                                 r.result.seed, r.hypervolume});
        }
        ar.merged = merge_fronts(fronts);
    }
    summary.reports = pairwise_reports(summary.hypervolume_table);
    return summary;
}

void write_experiment(const std::filesystem::path& dir, const Instance& instance,
                      const ExperimentSummary& summary) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "runs");
    fs::create_directories(dir / "fronts");
    save_instance(instance, dir / "instance.json");

    std::vector<PlotSeries> series;
    for (const auto& ar : summary.algorithms) {
        for (const auto& r : ar.runs)
            write_front_csv(dir / "runs" / run_file_name(ar.algorithm, r.run_index), r.result.front, instance);
        const std::string name(algorithm_name(ar.algorithm));
        write_front_csv(dir / "fronts" / (name + "_merged.csv"), ar.merged, instance);
        series.push_back({name, ar.merged});
    }
    write_text_file(dir / "hypervolume.csv", hypervolume_csv(summary.hypervolume_table));
    write_text_file(dir / "stats.csv", stats_csv(summary.reports));
    write_text_file(dir / "plot_data.csv", plot_data_csv(series));
}

} // namespace minersel
