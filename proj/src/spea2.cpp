#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "evolution.hpp"
#include "minersel/errors.hpp"
#include "minersel/moea.hpp"

namespace minersel {

namespace {

double distance(const NormalizedPoint& a, const NormalizedPoint& b) {
    return std::hypot(a.f1 - b.f1, a.f2 - b.f2);
}

} // namespace

std::vector<double> spea2_fitness(std::span<const ObjectiveVector> objectives,
                                  std::span<const NormalizedPoint> coords) {
    const std::size_t n = objectives.size();
    std::vector<std::size_t> strength(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(objectives[i], objectives[j])) ++strength[i];

    std::vector<double> fitness(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(objectives[j], objectives[i]))
                fitness[i] += static_cast<double>(strength[j]);

    const auto k = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    std::vector<double> others;
    others.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        others.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(distance(coords[i], coords[j]));
        double sigma = 0.0;
        if (!others.empty()) {
            const std::size_t kth = std::min(k, others.size()) - 1;
            std::nth_element(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(kth), others.end());
            sigma = others[kth];
        }
        fitness[i] += 1.0 / (sigma + 2.0);
    }
    return fitness;
}

std::vector<std::size_t> spea2_environmental_selection(std::span<const NormalizedPoint> coords,
                                                       std::span<const double> fitness,
                                                       std::size_t archive_size) {
    const std::size_t n = fitness.size();
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < n; ++i)
        if (fitness[i] < 1.0) selected.push_back(i);

    if (selected.size() < archive_size) {
        std::vector<std::size_t> dominated;
        for (std::size_t i = 0; i < n; ++i)
            if (!(fitness[i] < 1.0)) dominated.push_back(i);
        std::stable_sort(dominated.begin(), dominated.end(),
                         [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
        const std::size_t take = std::min(dominated.size(), archive_size - selected.size());
        selected.insert(selected.end(), dominated.begin(), dominated.begin() + static_cast<std::ptrdiff_t>(take));
        std::sort(selected.begin(), selected.end());
        return selected;
    }
    if (selected.size() == archive_size) return selected;

    // truncation: neighbour lists sorted once, removed members skipped lazily
    const std::size_t m = selected.size();
    std::vector<double> dist(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            dist[a * m + b] = dist[b * m + a] = distance(coords[selected[a]], coords[selected[b]]);

    std::vector<std::vector<std::size_t>> neighbours(m);
    for (std::size_t a = 0; a < m; ++a) {
        auto& list = neighbours[a];
        list.reserve(m - 1);
        for (std::size_t b = 0; b < m; ++b)
            if (b != a) list.push_back(b);
        std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
            const double dx = dist[a * m + x], dy = dist[a * m + y];
            return dx != dy ? dx < dy : x < y;
        });
    }

    std::vector<char> alive(m, 1);
    // true when a's alive-neighbour distance sequence is lexicographically smaller than b's
    auto more_crowded = [&](std::size_t a, std::size_t b) {
        auto ia = neighbours[a].begin(), ea = neighbours[a].end();
        auto ib = neighbours[b].begin(), eb = neighbours[b].end();
        while (true) {
            while (ia != ea && !alive[*ia]) ++ia;
            while (ib != eb && !alive[*ib]) ++ib;
            if (ia == ea || ib == eb) return false;
            const double da = dist[a * m + *ia], db = dist[b * m + *ib];
            if (da != db) return da < db;
            ++ia;
            ++ib;
        }
    };

    for (std::size_t remaining = m; remaining > archive_size; --remaining) {
        std::size_t victim = m;
        for (std::size_t a = 0; a < m; ++a) {
            if (!alive[a]) continue;
            if (victim == m || more_crowded(a, victim)) victim = a;
        }
        alive[victim] = 0;
    }

    std::vector<std::size_t> kept;
    kept.reserve(archive_size);
    for (std::size_t a = 0; a < m; ++a)
        if (alive[a]) kept.push_back(selected[a]);
    return kept;
}

RunResult spea2_run(const Instance& instance, const AlgorithmConfig& config) {
    config.validate();
    if (config.evaluation_budget < config.population_size)
        throw ConfigError("evaluation_budget must be at least population_size");
    const auto start = std::chrono::steady_clock::now();

    Rng rng(config.seed);
    detail::Evaluator evaluator(instance);
    const double rate = detail::mutation_rate(config, instance);

    std::vector<Individual> population;
    for (std::size_t i = 0; i < config.population_size; ++i)
        population.push_back(evaluator.make(random_mask(instance.size(), rng)));

    std::vector<Individual> archive;
    std::vector<ObjectiveVector> objectives;
    std::vector<NormalizedPoint> coords;
    while (true) {
        std::vector<Individual> pool = std::move(population);
        pool.insert(pool.end(), std::make_move_iterator(archive.begin()),
                    std::make_move_iterator(archive.end()));
        objectives.clear();
        coords.clear();
        for (const auto& ind : pool) {
            objectives.push_back(ind.objectives);
            coords.push_back(normalize(ind.objectives, instance));
        }
        const auto fitness = spea2_fitness(objectives, coords);
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i].spea2_fitness = fitness[i];

        archive.clear();
        for (std::size_t i : spea2_environmental_selection(coords, fitness, config.archive_size))
            archive.push_back(std::move(pool[i]));

        if (evaluator.count() >= config.evaluation_budget) break;
        const std::size_t count =
            std::min(config.population_size, config.evaluation_budget - evaluator.count());
        auto better = [&archive](std::size_t a, std::size_t b) {
            return archive[a].spea2_fitness < archive[b].spea2_fitness;
        };
        population = detail::breed(archive, count, better, config, rate, evaluator, rng);
    }

    RunResult result;
    result.algorithm = std::string(algorithm_name(Algorithm::spea2));
    result.seed = config.seed;
    result.front = detail::front_of(archive);
    result.evaluations = evaluator.count();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace minersel
