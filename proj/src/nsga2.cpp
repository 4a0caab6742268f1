#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "evolution.hpp"
#include "minersel/errors.hpp"
#include "minersel/moea.hpp"
#include "minersel/sorting.hpp"

namespace minersel {

void AlgorithmConfig::validate() const {
    if (population_size < 1) throw ConfigError("population_size must be positive");
    if (archive_size < 1) throw ConfigError("archive_size must be positive");
    if (evaluation_budget < 1) throw ConfigError("evaluation_budget must be positive");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
        throw ConfigError("crossover_rate must lie in [0, 1]");
    if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0))
        throw ConfigError("mutation_rate must lie in [0, 1]");
    if (tournament_size < 1) throw ConfigError("tournament_size must be positive");
}

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::nsga2: return "nsga2";
    case Algorithm::spea2: return "spea2";
    case Algorithm::random_search: return "random";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "nsga2") return Algorithm::nsga2;
    if (name == "spea2") return Algorithm::spea2;
    if (name == "random") return Algorithm::random_search;
    throw ConfigError(fmt::format("unknown algorithm '{}' (expected nsga2, spea2 or random)", name));
}

RunResult run_algorithm(Algorithm algorithm, const Instance& instance, const AlgorithmConfig& config) {
    switch (algorithm) {
    case Algorithm::nsga2: return nsga2_run(instance, config);
    case Algorithm::spea2: return spea2_run(instance, config);
    case Algorithm::random_search: return random_search_run(instance, config);
    }
    throw ConfigError("unknown algorithm");
}

std::vector<std::size_t> nsga2_environmental_selection(std::span<Individual> combined,
                                                       std::size_t keep) {
    std::vector<ObjectiveVector> points;
    points.reserve(combined.size());
    for (const auto& ind : combined) points.push_back(ind.objectives);

    const Fronts fronts = fast_nondominated_sort(points);
    std::vector<std::size_t> survivors;
    survivors.reserve(keep);
    std::vector<ObjectiveVector> front_points;
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        const auto& front = fronts[r];
        front_points.clear();
        for (std::size_t i : front) front_points.push_back(points[i]);
        const auto distances = crowding_distance(front_points);
        for (std::size_t k = 0; k < front.size(); ++k) {
            combined[front[k]].rank = r;
            combined[front[k]].crowding = distances[k];
        }
        if (survivors.size() >= keep) continue;
        if (survivors.size() + front.size() <= keep) {
            survivors.insert(survivors.end(), front.begin(), front.end());
            continue;
        }
        std::vector<std::size_t> order(front.begin(), front.end());
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return combined[a].crowding > combined[b].crowding;
        });
        order.resize(keep - survivors.size());
        survivors.insert(survivors.end(), order.begin(), order.end());
    }
    return survivors;
}

RunResult nsga2_run(const Instance& instance, const AlgorithmConfig& config) {
    config.validate();
    if (config.evaluation_budget < config.population_size)
        throw ConfigError("evaluation_budget must be at least population_size");
    const auto start = std::chrono::steady_clock::now();

    Rng rng(config.seed);
    detail::Evaluator evaluator(instance);
    const double rate = detail::mutation_rate(config, instance);
    const std::size_t mu = config.population_size;

    std::vector<Individual> population;
    population.reserve(2 * mu);
    for (std::size_t i = 0; i < mu; ++i)
        population.push_back(evaluator.make(random_mask(instance.size(), rng)));
    nsga2_environmental_selection(population, mu);

    auto better = [&population](std::size_t a, std::size_t b) {
        const Individual& x = population[a];
        const Individual& y = population[b];
        return x.rank < y.rank || (x.rank == y.rank && x.crowding > y.crowding);
    };

    while (evaluator.count() < config.evaluation_budget) {
        const std::size_t lambda = std::min(mu, config.evaluation_budget - evaluator.count());
        auto offspring = detail::breed(population, lambda, better, config, rate, evaluator, rng);

        std::vector<Individual> combined = std::move(population);
        combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
        const auto survivors = nsga2_environmental_selection(combined, mu);
        population.clear();
        for (std::size_t i : survivors) population.push_back(std::move(combined[i]));
    }

    std::vector<Individual> first_front;
    for (const auto& ind : population)
        if (ind.rank == 0) first_front.push_back(ind);

    RunResult result;
    result.algorithm = std::string(algorithm_name(Algorithm::nsga2));
    result.seed = config.seed;
    result.front = detail::front_of(first_front);
    result.evaluations = evaluator.count();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace minersel
