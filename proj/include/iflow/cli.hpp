#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iflow {

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success/feasible, 1 negative verdict (infeasible,
/// not series-parallel, not certified), 2 input error, 3 enumeration
/// budget exceeded. The IFLOW_BUDGET environment variable overrides the
/// default scenario-enumeration budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace iflow
