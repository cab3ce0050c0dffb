#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubedist::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // conjecture violation or failed identity check
inline constexpr int kParseError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kBudgetError = 4;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubedist::cli
