#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minersel/front.hpp"
#include "minersel/instance.hpp"
#include "minersel/objectives.hpp"

namespace minersel {

struct Individual {
    SelectionMask mask;
    ObjectiveVector objectives;
    std::size_t rank = 0;
    double crowding = 0.0;
    double spea2_fitness = 0.0;
};

struct AlgorithmConfig {
    std::size_t population_size = 100;
    std::size_t archive_size = 100;
    std::size_t evaluation_budget = 40000;
    double crossover_rate = 0.9;
    /// Per-bit flip probability; unset means 1/n.
    std::optional<double> mutation_rate;
    std::size_t tournament_size = 2;
    std::uint64_t seed = 0;

    /// Throws ConfigError.
    void validate() const;
};

enum class Algorithm { nsga2, spea2, random_search };

std::string_view algorithm_name(Algorithm algorithm);
/// Accepts "nsga2", "spea2" and "random". Throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);

struct RunResult {
    std::string algorithm;
    std::uint64_t seed = 0;
    FrontSet front;
    std::size_t evaluations = 0;
    double seconds = 0.0;
};

RunResult nsga2_run(const Instance& instance, const AlgorithmConfig& config);
RunResult spea2_run(const Instance& instance, const AlgorithmConfig& config);
RunResult random_search_run(const Instance& instance, const AlgorithmConfig& config);
RunResult run_algorithm(Algorithm algorithm, const Instance& instance, const AlgorithmConfig& config);

/// Elitist (mu + lambda) survivor selection. Assigns rank and crowding to
/// every member of `combined` and returns the indices of the `keep`
/// survivors, ordered front by front and by descending crowding inside the
/// last admitted front.
std::vector<std::size_t> nsga2_environmental_selection(std::span<Individual> combined,
                                                       std::size_t keep);

/// SPEA2 fitness F = R + D over a pool. Dominance uses the raw objectives;
/// the k-th nearest neighbour density uses `coords`, k = floor(sqrt(pool size)).
std::vector<double> spea2_fitness(std::span<const ObjectiveVector> objectives,
                                  std::span<const NormalizedPoint> coords);

/// Indices (ascending) of the next SPEA2 archive. Every F < 1 member is kept;
/// an overfull archive is truncated by repeatedly dropping the member whose
/// sorted neighbour distances are lexicographically smallest (lowest index
/// on a complete tie), and an underfull one is topped up by ascending F.
std::vector<std::size_t> spea2_environmental_selection(std::span<const NormalizedPoint> coords,
                                                       std::span<const double> fitness,
                                                       std::size_t archive_size);

} // namespace minersel
