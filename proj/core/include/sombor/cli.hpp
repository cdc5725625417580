#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sombor {

// Exit codes of the command line interface.
inline constexpr int kExitOk = 0;           // success / all checks passed
inline constexpr int kExitVerifyFailed = 1; // a verification produced a failing row
inline constexpr int kExitUsage = 2;        // bad arguments or infeasible request

// Runs one CLI invocation.  argv excludes the program name, e.g.
// {"verify", "--theorem", "max", "--n-max", "8"}.  The stream overload is
// what tests use; the plain overload binds std::cin/cout/cerr.
int run_command(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
                std::ostream& err);
int run_command(const std::vector<std::string>& argv);

} // namespace sombor
