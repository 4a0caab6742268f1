#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "minersel/config.hpp"
#include "minersel/instance.hpp"
#include "minersel/io.hpp"
#include "minersel/moea.hpp"

namespace minersel {

struct RunRecord {
    std::size_t run_index = 0;
    RunResult result;
    double hypervolume = 0.0;
};

struct AlgorithmResults {
    Algorithm algorithm;
    std::vector<RunRecord> runs;
    FrontSet merged;

    std::vector<double> hypervolumes() const;
};

struct ExperimentSummary {
    std::vector<AlgorithmResults> algorithms;
    std::vector<HypervolumeRow> hypervolume_table;
    std::vector<PairReport> reports;
};

/// Builds the instance named by the config, applying any objective override.
Instance resolve_instance(const ExperimentConfig& config);

/// Runs every (algorithm, run) pair, fanning out over config.threads workers.
/// Results do not depend on the thread count or completion order. A failing
/// run aborts the experiment with a message naming the run.
ExperimentSummary run_experiment(const ExperimentConfig& config, const Instance& instance);

/// Writes the result directory:
///   instance.json, runs/<alg>_run<NNN>.csv, fronts/<alg>_merged.csv,
///   hypervolume.csv, stats.csv, plot_data.csv
void write_experiment(const std::filesystem::path& dir, const Instance& instance,
                      const ExperimentSummary& summary);

std::string run_file_name(Algorithm algorithm, std::size_t run_index);

} // namespace minersel
