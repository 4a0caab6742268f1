#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minersel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point behind the `minersel` executable. `args` excludes the
/// program name. Subcommands: generate, optimize, experiment, stats.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace minersel
