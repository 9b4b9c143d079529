#pragma once

#include <iosfwd>

namespace dictpin::cli {

// Exit codes: 0 success, 1 runtime or pipeline failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

// Entry point for the `dictpin` tool. Subcommands: analyze, sweep, tables, inspect.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dictpin::cli
