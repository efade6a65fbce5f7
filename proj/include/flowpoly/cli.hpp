#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flowpoly {

/// Runs the command line (without the program name) and returns the exit
/// code: 0 success, 1 failed verification, 2 usage error, 3 invariant
/// violation. Errors go to `err` as {"error": {"kind", "message"}}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowpoly
