#pragma once

#include <iosfwd>

namespace tplab {

/// Runs one subcommand (simulate, sequence, verify, render, analyze).
/// Returns 0 on success, 1 when a must-agree binding diverges or a check
/// fails, and 2 on a usage error, with usage text written to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tplab
