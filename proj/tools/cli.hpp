#pragma once

#include <iosfwd>

namespace qutrit::cli {

inline constexpr int kExitPhysical = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnphysical = 3;

/// Entry point of the `qutrit` command; writes to `out`/`err` instead of the process streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qutrit::cli
