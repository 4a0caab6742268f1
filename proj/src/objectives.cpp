#include "minersel/objectives.hpp"

#include <algorithm>
#include <stdexcept>

#include "minersel/errors.hpp"

namespace minersel {

SelectionMask SelectionMask::full(std::size_t n) {
    SelectionMask m(n);
    std::fill(m.bits_.begin(), m.bits_.end(), std::uint8_t{1});
    return m;
}

SelectionMask SelectionMask::singleton(std::size_t n, std::size_t i) {
    SelectionMask m(n);
    m.set(i);
    return m;
}

SelectionMask SelectionMask::from_string(std::string_view text) {
    SelectionMask m(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') m.bits_[i] = 1;
        else if (text[i] != '0')
            throw std::invalid_argument("mask strings may only contain '0' and '1'");
    }
    return m;
}

std::size_t SelectionMask::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool SelectionMask::any() const {
    return std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

std::string SelectionMask::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

ObjectiveVector evaluate(const SelectionMask& mask, const Instance& instance) {
    if (mask.size() != instance.size())
        throw std::invalid_argument("mask length does not match the number of miners");
    ObjectiveVector v;
    std::size_t members = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask.test(i)) continue;
        v.energy_kwh += instance.energy_of(i);
        v.reputation += instance.reputation_of(i);
        ++members;
    }
    if (members == 0) throw InfeasibleSolution("cannot evaluate the empty miner subset");
    if (instance.settings().aggregation == Aggregation::mean)
        v.reputation /= static_cast<double>(members);
    return v;
}

NormalizedPoint normalize(const ObjectiveVector& v, const Instance& instance) {
    const double energy_bound = instance.total_energy_kwh();
    const double reputation_bound = instance.settings().aggregation == Aggregation::sum
                                        ? instance.total_reputation()
                                        : instance.max_reputation();
    if (!(energy_bound > 0.0)) throw DegenerateInstance("instance has zero total energy");
    if (!(reputation_bound > 0.0)) throw DegenerateInstance("instance has zero total reputation");
    return {v.energy_kwh / energy_bound, 1.0 - v.reputation / reputation_bound};
}

SelectionMask repair(SelectionMask mask, Rng& rng) {
    if (mask.size() == 0) throw std::invalid_argument("cannot repair a zero-length mask");
    if (!mask.any()) mask.set(rng.below(mask.size()));
    return mask;
}

} // namespace minersel
