#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coarg::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 a cross-validation
/// report contains a counterexample, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coarg::cli
