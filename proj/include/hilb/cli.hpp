#pragma once

#include <ostream>

namespace hilb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `hilbdon` tool. Results go to `out`, diagnostics to
// `err`. Returns 0 on success, 1 on a computation error (or a failed
// verification), 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hilb::cli
