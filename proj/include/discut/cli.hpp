#pragma once

#include <iosfwd>

namespace discut {

/// Entry point of the `discut` tool. Exit codes: 0 solved or decision yes,
/// 1 decision no (or verification failure), 2 usage error, 3 capability error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace discut
