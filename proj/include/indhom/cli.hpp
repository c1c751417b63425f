#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indhom {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a check failed or violations were found
inline constexpr int kExitUsage = 2;    // bad arguments or unreadable graph

// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indhom
