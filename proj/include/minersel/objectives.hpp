#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minersel/instance.hpp"
#include "minersel/rng.hpp"

namespace minersel {

/// Genotype: one bit per miner, set when the miner is selected.
class SelectionMask {
public:
    SelectionMask() = default;
    explicit SelectionMask(std::size_t n) : bits_(n, 0) {}

    static SelectionMask full(std::size_t n);
    static SelectionMask singleton(std::size_t n, std::size_t i);
    /// Parses a string of '0'/'1' characters; bit i is character i.
    static SelectionMask from_string(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value = true) { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }
    std::size_t count() const;
    bool any() const;

    std::string to_string() const;

    auto operator<=>(const SelectionMask&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Raw phenotype: energy is minimized, reputation maximized.
struct ObjectiveVector {
    double energy_kwh = 0.0;
    double reputation = 0.0;

    ObjectiveVector& operator+=(const ObjectiveVector& o) {
        energy_kwh += o.energy_kwh;
        reputation += o.reputation;
        return *this;
    }
    friend ObjectiveVector operator+(ObjectiveVector a, const ObjectiveVector& b) { return a += b; }
    auto operator<=>(const ObjectiveVector&) const = default;
};

/// Both coordinates in [0, 1], both minimized.
struct NormalizedPoint {
    double f1 = 0.0;
    double f2 = 0.0;

    auto operator<=>(const NormalizedPoint&) const = default;
};

/// Throws InfeasibleSolution for an empty mask and std::invalid_argument on
/// a length mismatch.
ObjectiveVector evaluate(const SelectionMask& mask, const Instance& instance);

/// Pareto dominance with energy minimized and reputation maximized.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.energy_kwh <= b.energy_kwh && a.reputation >= b.reputation &&
           (a.energy_kwh < b.energy_kwh || a.reputation > b.reputation);
}

/// Pareto dominance in (min, min) orientation.
inline bool dominates(const NormalizedPoint& a, const NormalizedPoint& b) {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

/// Maps onto the fixed box given by the instance totals. Under mean
/// aggregation the reputation bound is the best single-miner reputation.
/// Throws DegenerateInstance when a bound is zero.
NormalizedPoint normalize(const ObjectiveVector& v, const Instance& instance);

/// Feasible masks pass through; an empty one gets one uniformly drawn bit.
SelectionMask repair(SelectionMask mask, Rng& rng);

} // namespace minersel
