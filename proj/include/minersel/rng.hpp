#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace minersel {

/// Seedable random stream shared by every stochastic component.
///
/// The engine is mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are implementation-defined, so the
/// draws below are built directly on the raw 64-bit output to keep runs
/// reproducible across toolchains.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::size_t below(std::size_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace minersel
