#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcloc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // out of class, disconnected, counterexample found
inline constexpr int kExitUsage = 2;     // bad flags, parse errors, caps exceeded
inline constexpr int kExitInternal = 3;  // a decomposition failed its own verification

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcloc::cli
