#pragma once

#include <ostream>

namespace bautin::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;
inline constexpr int kSolverFailure = 3;
inline constexpr int kGapMismatch = 4;
inline constexpr int kWeakFocus = 5;
inline constexpr int kInconclusive = 6;

// Runs one command; results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bautin::cli
