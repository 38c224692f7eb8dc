#pragma once

#include <ostream>

namespace conetutte::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the conetutte tool, with the output streams injected so
// tests can capture them.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conetutte::cli
