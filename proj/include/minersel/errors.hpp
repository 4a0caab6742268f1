#pragma once

#include <stdexcept>
#include <string>

namespace minersel {

/// Invalid configuration values (bad sizes, rates out of range, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. The message names the line or field at fault.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Attempt to evaluate the empty miner subset.
struct InfeasibleSolution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Instance totals that make normalization undefined.
struct DegenerateInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace minersel
