#include <chrono>

#include "evolution.hpp"
#include "minersel/moea.hpp"

namespace minersel {

RunResult random_search_run(const Instance& instance, const AlgorithmConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    detail::Evaluator evaluator(instance);

    RunResult result;
    result.algorithm = std::string(algorithm_name(Algorithm::random_search));
    result.seed = config.seed;
    while (evaluator.count() < config.evaluation_budget) {
        Individual ind = evaluator.make(random_mask(instance.size(), rng));
        result.front.insert({std::move(ind.mask), ind.objectives});
    }
    result.evaluations = evaluator.count();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace minersel
