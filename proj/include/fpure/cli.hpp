#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fpure {

enum ExitCode : int {
  kExitOk = 0,
  kExitSentinel = 1,
  kExitInput = 2,
  kExitBudget = 3,
};

/// Runs the command line `args` (without the program name). Report text goes
/// to `out`, diagnostics to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for cache keys.
std::uint64_t fnv1a64(std::string_view data) noexcept;

}  // namespace fpure
