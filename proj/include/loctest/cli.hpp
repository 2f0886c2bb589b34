#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loctest::cli {

// Exit codes of `check`; other commands use 0 for success and 1 for a
// negative outcome (failed verification, cross-route disagreement).
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kCapError = 3;

// Runs the command line `args` (without the program name). `in` serves
// `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace loctest::cli
