#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "circlesys/error.hpp"

namespace circlesys {

/// Exit status of the command-line tool for a library error: 1 for a failed
/// check on valid input, 2 for bad input or usage, 3 for numeric failure.
int exit_code_for(Errc code);

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace circlesys
