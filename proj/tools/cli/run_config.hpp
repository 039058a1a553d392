#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbinv/cost_model.hpp"
#include "gbinv/simulator.hpp"
#include "gbinv/stochastics.hpp"
#include "gbinv/sweep.hpp"

namespace gbinv::cli {

/// Invalid or missing configuration. `field()` is the dotted path of the
/// offending key, e.g. "costs.holding_rate".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Command { optimize, simulate, sweep, validate };

/// Flat key -> raw value map, as read from a config file or flags.
using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Every recognised key with its dotted field path, in documentation order.
struct KeySpec {
  std::string_view key;
  std::string_view field_path;
};
[[nodiscard]] const std::vector<KeySpec>& known_keys();

/// Parses `key = value` lines. Blank lines and `#` comments are skipped,
/// surrounding whitespace and matching quotes are stripped. Unknown or
/// duplicate keys raise ConfigError.
[[nodiscard]] KeyValues parse_key_values(std::string_view text);
[[nodiscard]] KeyValues read_config_file(const std::string& path);

struct RunConfig {
  AuctionParams auction;
  CostParams costs;
  std::optional<double> quantity;
  TdMode td_mode = TdMode::paper;
  AMode a_mode = AMode::approx;
  ShortfallRule shortfall_rule = ShortfallRule::reset_to_q;
  DrawMethod draw_method = DrawMethod::erlang;
  std::uint64_t num_cycles = 100000;
  std::uint64_t replications = 1;
  std::uint64_t seed = 42;
  std::string format = "markdown";
  std::optional<std::string> path;
  std::optional<std::string> event_log;
  std::vector<long long> n_values;
  std::vector<double> t_values;
  std::vector<double> lambda_values;
  bool include_simulation = false;

  [[nodiscard]] SimulationConfig simulation_config() const;
};

/// Builds and validates a RunConfig for `command`. Cost keys are always
/// required; auction keys are required except where sweep grid lists
/// replace them.
[[nodiscard]] RunConfig build_run_config(const KeyValues& values, Command command);

}  // namespace gbinv::cli
