#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scat {

// Exit codes beyond the per-command outcome codes.
inline constexpr int exit_usage = 64;       // bad arguments or unparsable input
inline constexpr int exit_infeasible = 65;  // feasibility bound or undecided pair
inline constexpr int exit_internal = 70;    // rewrite cap exceeded

// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scat
