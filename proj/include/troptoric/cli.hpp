#pragma once

// Command implementations behind the `troptoric` executable. Each command
// takes already-loaded JSON documents and returns its printable output with
// an exit status, so the tool itself only parses arguments and does I/O.

#include <cstdint>
#include <optional>
#include <string>

#include "troptoric/json_io.hpp"

namespace troptoric::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kPreconditionViolation = 2,
  kInequalityViolation = 3,
};

struct CommandResult {
  std::string command;
  Json input;
  /// Text for stdout: one pretty-printed JSON document, or JSON lines for sweep.
  std::string output;
  int exit_code = kOk;
};

/// Default seed: TROPTORIC_SEED when set and numeric, else kFallbackSeed.
inline constexpr std::uint64_t kFallbackSeed = 20240611;
std::uint64_t default_seed();

/// Reads a JSON file; "builtin:<name>" yields the fan JSON of a builtin fan.
/// Throws ParseError on I/O or syntax errors.
Json load_json_source(const std::string& source);

/// Sweep divisor counts above this are sampled instead of enumerated.
inline constexpr std::uint64_t kExhaustiveSweepLimit = 100000;
inline constexpr std::uint64_t kSampledSweepCount = 10000;

CommandResult fan_builtin(const std::string& name, std::optional<int> parameter);
CommandResult fan_blowup(const Json& fan, std::int64_t cone_index);
CommandResult fan_validate(const Json& fan);
CommandResult h0(const Json& fan, const Json& divisor);
CommandResult rr(const Json& fan, const Json& divisor);
CommandResult sections(const Json& fan, const Json& divisor, const std::optional<Json>& points);
CommandResult sweep(const Json& fan, const std::string& range, std::uint64_t seed);
CommandResult curve(const Json& polynomial, const std::optional<Json>& fan);

}  // namespace troptoric::cli
