// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpvar {

/// Dispatches one CLI invocation. All command output is JSON on `out`;
/// diagnostics go to `err`. Exit codes: 0 success, 2 validation or
/// precondition rejection, 1 internal fault.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpvar
