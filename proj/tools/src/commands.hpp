#pragma once

#include <iosfwd>

#include "twoouter/types.hpp"

namespace twoouter::cli {

enum ExitCode { kOk = 0, kParse = 2, kEmbedding = 3, kOuterplanarity = 4, kInternal = 5, kSizeCap = 6 };

int exit_code_for(ErrorKind kind);

/// Whole command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twoouter::cli
