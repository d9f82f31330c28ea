#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace statesum {

/// Runs one CLI invocation. Exit codes: 0 success; 1 usage/parse/validation
/// errors; 2 a verification mismatch between methods or against the
/// embedded golden values; 3 a closed-form discrepancy report (informative).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace statesum
