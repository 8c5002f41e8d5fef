#pragma once

#include <iosfwd>

namespace yfrieze {

// Entry point behind the `yfrieze` tool. Exit codes: 0 success, 1 usage or
// input errors, 2 knitting failure or a failed check (JSON on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace yfrieze
