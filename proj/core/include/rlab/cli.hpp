#pragma once

#include <string>
#include <vector>

namespace rlab {

// Command-line front door. Subcommands: opnorm, lowerbound, cylinder,
// moment, kernels, tests. Returns the process exit code: 0 success,
// 2 validation/usage error, 3 numerical non-convergence or band violation.
int run_cli(const std::vector<std::string>& args);

}  // namespace rlab
