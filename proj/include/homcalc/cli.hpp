#ifndef HOMCALC_CLI_HPP
#define HOMCALC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace homcalc
{

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input_error = 2 };

/// Entry point of the homcalc tool. `args` excludes the program name.
/// Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace homcalc

#endif
