#pragma once

#include <iosfwd>

namespace lpa::cli {

inline constexpr const char* kVersion = "lpa 0.1.0";

/// Parses argv, runs one subcommand, writes the report to `out` and a single
/// "error: <Kind>: <message>" line to `err` on failure.
/// Returns 0 on success, 1 on malformed input, 2 on unsupported combinations.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
