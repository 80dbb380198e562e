#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stg::cli {

/// Exit codes of execute().
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // internal error or a failed self-check
  kUsage = 2,         // bad flags, unknown command, unreadable file
  kPrecondition = 3,  // malformed input or a violated precondition
  kBudget = 4,        // a configured size or iteration budget was exceeded
};

/// Runs one command line (without the program name). The result record is
/// written to `out` as `key: value` lines; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, rendered as 16 hex digits in the `input_digest` field.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace stg::cli
