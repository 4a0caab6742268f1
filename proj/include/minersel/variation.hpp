#pragma once

#include <cstddef>
#include <utility>

#include "minersel/objectives.hpp"
#include "minersel/rng.hpp"

namespace minersel {

/// Cut point uniform in 1..n-1; the children swap suffixes. Masks of length
/// one cannot be cut and are copied.
std::pair<SelectionMask, SelectionMask> one_point_crossover(const SelectionMask& a,
                                                            const SelectionMask& b, Rng& rng);

/// Flips each bit independently with probability rate, then repairs.
SelectionMask bitflip_mutation(SelectionMask mask, double rate, Rng& rng);

/// Fair coin per bit, repaired if it comes out empty.
SelectionMask random_mask(std::size_t n, Rng& rng);

/// Draws `size` contestants uniformly with replacement from [0, pool_size)
/// and returns the best under `better`. Ties go to the earliest draw.
template <typename Better>
std::size_t tournament(std::size_t pool_size, std::size_t size, Better&& better, Rng& rng) {
    std::size_t winner = rng.below(pool_size);
    for (std::size_t k = 1; k < size; ++k) {
        const std::size_t challenger = rng.below(pool_size);
        if (better(challenger, winner)) winner = challenger;
    }
    return winner;
}

template <typename Better>
std::size_t binary_tournament(std::size_t pool_size, Better&& better, Rng& rng) {
    return tournament(pool_size, 2, std::forward<Better>(better), rng);
}

} // namespace minersel
