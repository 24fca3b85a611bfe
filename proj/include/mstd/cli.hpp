#pragma once

#include <iosfwd>

namespace mstd {

// Entry point behind the mstd binary. Parses argv, runs the requested
// subcommand, writes one document (JSON by default) to out and progress /
// timing to err. Returns the process exit code: 0 = all checks passed,
// 1 = a requested check or self-verification failed, 2 = usage or
// parameter error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mstd
