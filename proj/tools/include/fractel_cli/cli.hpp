#pragma once

#include <iosfwd>

namespace fractel::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

/// Runs the `fractel` command line against the given streams. `--out` redirects
/// the primary output to a file; diagnostics and summaries go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fractel::cli
