#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbikit {

// Exit codes: 0 success or passing verdict, 1 failing verdict, 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// Runs one subcommand; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbikit
