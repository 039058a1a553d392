#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace gbinv::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericError = 3;
inline constexpr int kExitPartialGrid = 4;

struct CommandOutput {
  std::string report;
  std::string diagnostics;  // for stderr
  int exit_code = kExitOk;
};

[[nodiscard]] CommandOutput cmd_optimize(const RunConfig& config);
[[nodiscard]] CommandOutput cmd_simulate(const RunConfig& config);
[[nodiscard]] CommandOutput cmd_sweep(const RunConfig& config);
[[nodiscard]] CommandOutput cmd_validate(const RunConfig& config);

/// Full entry point: argument parsing, config loading, dispatch, output.
/// Reports go to `out` (or to the configured path); diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gbinv::cli
