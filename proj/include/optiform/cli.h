#ifndef OPTIFORM_CLI_H_
#define OPTIFORM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace optiform {

// Exit codes.
inline constexpr int kExitOk = 0;
// Bad usage, or a theorem check found a counterexample.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBound = 3;

// Runs one subcommand. `args` excludes the program name. Reports and
// documents go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace optiform

#endif  // OPTIFORM_CLI_H_
