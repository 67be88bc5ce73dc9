#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imx {

/// Runs the command-line front end on args (without the program name) and
/// returns the process exit code: 0 success, 1 precondition, 2 parse,
/// 3 numeric failure or failed verification, 4 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imx
