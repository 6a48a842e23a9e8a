#pragma once

#include <iosfwd>

namespace f2j::cli {

// Batch driver behind the forms2java binary. Returns the process exit code:
// 0 clean, 1 diagnostics with error severity (or warnings under --strict),
// 2 usage/configuration/IO failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace f2j::cli
