#pragma once

// Pieces shared by the generational algorithms.

#include <vector>

#include "minersel/moea.hpp"
#include "minersel/rng.hpp"
#include "minersel/variation.hpp"

namespace minersel::detail {

class Evaluator {
public:
    explicit Evaluator(const Instance& instance) : instance_(instance) {}

    Individual make(SelectionMask mask) {
        Individual ind;
        ind.objectives = evaluate(mask, instance_);
        ind.mask = std::move(mask);
        ++count_;
        return ind;
    }

    std::size_t count() const { return count_; }

private:
    const Instance& instance_;
    std::size_t count_ = 0;
};

inline double mutation_rate(const AlgorithmConfig& config, const Instance& instance) {
    return config.mutation_rate.value_or(1.0 / static_cast<double>(instance.size()));
}

/// Breeds `count` evaluated children from `parents`: tournament, optional
/// one-point crossover, bit-flip mutation with repair.
template <typename Better>
std::vector<Individual> breed(const std::vector<Individual>& parents, std::size_t count,
                              Better&& better, const AlgorithmConfig& config, double rate,
                              Evaluator& evaluator, Rng& rng) {
    std::vector<Individual> children;
    children.reserve(count);
    while (children.size() < count) {
        const auto& a = parents[tournament(parents.size(), config.tournament_size, better, rng)];
        const auto& b = parents[tournament(parents.size(), config.tournament_size, better, rng)];
        auto [c1, c2] = rng.bernoulli(config.crossover_rate) ? one_point_crossover(a.mask, b.mask, rng)
                                                              : std::pair{a.mask, b.mask};
        children.push_back(evaluator.make(bitflip_mutation(std::move(c1), rate, rng)));
        if (children.size() < count)
            children.push_back(evaluator.make(bitflip_mutation(std::move(c2), rate, rng)));
    }
    return children;
}

inline FrontSet front_of(const std::vector<Individual>& individuals) {
    FrontSet front;
    for (const auto& ind : individuals) front.insert({ind.mask, ind.objectives});
    return front;
}

} // namespace minersel::detail
