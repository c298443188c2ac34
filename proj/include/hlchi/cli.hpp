#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hlchi {

/// Runs the hlchi command line (arguments without the program name).
/// Returns the exit status: 0 success, 1 verification failure, 2 usage,
/// parse or guard error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlchi
