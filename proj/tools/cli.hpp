#pragma once

#include <iosfwd>

namespace rayclass::cli {

/// Parses argv, runs one command and writes its payload to `out`.
/// Returns 0 on success, 1 when a check fails, 2 on usage or validation
/// errors and 3 on numerical failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rayclass::cli
