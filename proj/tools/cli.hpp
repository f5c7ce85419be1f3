#pragma once

#include <iosfwd>

namespace gpf::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kVerificationFailure = 2,
};

/// Parses argv, runs one subcommand and writes its output to `out` (or the
/// --output file). Diagnostics and --verbose timing go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpf::cli
