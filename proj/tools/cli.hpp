#pragma once

#include <ostream>

namespace ccr::cli {

/// Runs the `ccr` command line. Returns the process exit code:
/// 0 pass, 1 canonical failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccr::cli
