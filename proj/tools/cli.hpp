#pragma once

#include <ostream>

namespace hermitian::cli {

/// Runs the command line `argv` and returns the process exit code:
/// 0 on success, 1 when a verification fails, 2 on bad arguments or when
/// a size guard trips.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermitian::cli
