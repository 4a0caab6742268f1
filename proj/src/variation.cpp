#include "minersel/variation.hpp"

#include <stdexcept>

namespace minersel {

std::pair<SelectionMask, SelectionMask> one_point_crossover(const SelectionMask& a,
                                                            const SelectionMask& b, Rng& rng) {
    if (a.size() != b.size()) throw std::invalid_argument("crossover parents differ in length");
    SelectionMask c1 = a;
    SelectionMask c2 = b;
    const std::size_t n = a.size();
    if (n < 2) return {c1, c2};
    const std::size_t cut = 1 + rng.below(n - 1);
    for (std::size_t i = cut; i < n; ++i) {
        c1.set(i, b.test(i));
        c2.set(i, a.test(i));
    }
    return {std::move(c1), std::move(c2)};
}

SelectionMask bitflip_mutation(SelectionMask mask, double rate, Rng& rng) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("mutation rate must lie in [0, 1]");
    if (rate > 0.0)
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (rng.bernoulli(rate)) mask.flip(i);
    return repair(std::move(mask), rng);
}

SelectionMask random_mask(std::size_t n, Rng& rng) {
    SelectionMask mask(n);
    for (std::size_t i = 0; i < n; ++i) mask.set(i, rng.coin());
    return repair(std::move(mask), rng);
}

} // namespace minersel
