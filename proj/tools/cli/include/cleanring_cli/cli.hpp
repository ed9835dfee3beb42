#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

namespace cleanring::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitCap = 3,
};

// Accepts a decimal count or a power of two written "2^k".
std::optional<std::uint64_t> parse_cap(std::string_view text);

// Entry point shared by main() and the tests. `env_cap` is the value of
// CLEAN_RING_CAP or null; an explicit --cap wins over it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const char* env_cap);

}  // namespace cleanring::cli
