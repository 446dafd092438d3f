#ifndef BOSONIC_TOOLS_COMMANDS_HPP
#define BOSONIC_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>

#include "json_io.hpp"

namespace bosonic::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Command-line overrides; unset fields fall back to the input JSON, then defaults.
struct Options {
  std::optional<int> dim;
  std::optional<int> trunc;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  bool force_failure = false;
};

struct Outcome {
  Json report;
  int exit_code = kSuccess;
};

constexpr int kDefaultTruncation = 8;

// Each command throws InputError (or a library DimensionError/TruncationError)
// on bad input; callers map those to kInputError.
Outcome cmd_check(const Json& input, const Options& options);
Outcome cmd_kernel(const Json& input, const Options& options);
Outcome cmd_element(const Json& input, const Options& options);
Outcome cmd_selftest(const Options& options);

}  // namespace bosonic::cli

#endif  // BOSONIC_TOOLS_COMMANDS_HPP
