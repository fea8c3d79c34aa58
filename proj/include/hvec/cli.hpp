#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hvec/sequences.hpp"

namespace hvec::cli {

/// Schema tag carried by every JSON report.
inline constexpr const char* kSchemaVersion = "hvec/1";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,     // a predicate failed / no decomposition / not an O-sequence
    kUsage = 2,        // malformed arguments or unusable input
    kUndecided = 3,    // classify only
    kImpossible = 4,   // refutation survivor or failing proof trace: a bug
};

/// Parses `1,3,4,3,1` (whitespace ignored). Throws InvalidHVector naming
/// the offending token, or for any h-vector invariant violation.
HVector parse_hvector(std::string_view text);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hvec::cli
