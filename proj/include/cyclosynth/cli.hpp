#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclosynth {

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`; failures print {"error": kind, "message": text} to `err`.
/// Exit codes: 0 success, 1 error, 2 obstructed synthesis or reduction.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclosynth
