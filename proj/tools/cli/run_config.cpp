#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gbinv/errors.hpp"

namespace gbinv::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::string_view field_path(std::string_view key) {
  for (const auto& spec : known_keys()) {
    if (spec.key == key) return spec.field_path;
  }
  return key;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* begin = text.data();
  const auto* end = begin + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError(std::string(field_path(key)), "cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::replace(normalized.begin(), normalized.end(), '[', ' ');
  std::replace(normalized.begin(), normalized.end(), ']', ' ');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) out.push_back(parse_number<T>(key, token));
  if (out.empty()) throw ConfigError(std::string(field_path(key)), "list must not be empty");
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(std::string(field_path(key)), "expected true or false, got '" + std::string(text) + "'");
}

class Reader {
 public:
  explicit Reader(const KeyValues& values) : values_(values) {}

  [[nodiscard]] std::optional<std::string_view> raw(std::string_view key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return std::string_view(it->second);
  }

  template <typename T>
  std::optional<T> number(std::string_view key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    return parse_number<T>(key, *text);
  }

  template <typename T>
  T required(std::string_view key) const {
    const auto value = number<T>(key);
    if (!value) throw ConfigError(std::string(field_path(key)), "missing required value");
    return *value;
  }

  // Runs a core parser (parse_td_mode & co.) and re-labels its error.
  template <typename Parse>
  auto choice(std::string_view key, Parse parse) const -> std::optional<decltype(parse(std::string_view{}))> {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    try {
      return parse(*text);
    } catch (const ParameterError& e) {
      throw ConfigError(std::string(field_path(key)), e.what());
    }
  }

 private:
  const KeyValues& values_;
};

void require_positive(std::string_view key, double value) {
  if (!(value > 0.0)) throw ConfigError(std::string(field_path(key)), "must be > 0");
}

void require_nonnegative(std::string_view key, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(field_path(key)), "must be finite and >= 0");
  }
}

}  // namespace

const std::vector<KeySpec>& known_keys() {
  static const std::vector<KeySpec> keys{
      {"n_required", "auction.n_required"},
      {"max_time", "auction.max_time"},
      {"arrival_rate", "auction.arrival_rate"},
      {"dispatch_cost", "costs.dispatch_cost"},
      {"transport_cost_per_unit", "costs.transport_cost_per_unit"},
      {"holding_rate", "costs.holding_rate"},
      {"penalty_cost", "costs.penalty_cost"},
      {"reorder_cost", "costs.reorder_cost"},
      {"quantity", "policy.quantity"},
      {"td_mode", "modes.td_mode"},
      {"a_mode", "modes.a_mode"},
      {"shortfall_rule", "modes.shortfall_rule"},
      {"draw_method", "simulation.draw_method"},
      {"num_cycles", "simulation.num_cycles"},
      {"replications", "simulation.replications"},
      {"seed", "simulation.seed"},
      {"event_log", "simulation.event_log"},
      {"format", "output.format"},
      {"path", "output.path"},
      {"n_values", "sweep.n_values"},
      {"t_values", "sweep.t_values"},
      {"lambda_values", "sweep.lambda_values"},
      {"include_simulation", "sweep.include_simulation"},
  };
  return keys;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find_first_of("=:");
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto& keys = known_keys();
    if (std::none_of(keys.begin(), keys.end(), [&](const KeySpec& k) { return k.key == key; })) {
      throw ConfigError(key, "unknown configuration key (line " + std::to_string(line_no) + ")");
    }
    if (!out.emplace(key, value).second) {
      throw ConfigError(std::string(field_path(key)), "duplicate key (line " + std::to_string(line_no) + ")");
    }
  }
  return out;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_key_values(buffer.str());
}

SimulationConfig RunConfig::simulation_config() const {
  SimulationConfig config;
  config.num_cycles = num_cycles;
  config.seed = seed;
  config.shortfall_rule = shortfall_rule;
  config.td_mode_for_comparison = td_mode;
  config.draw_method = draw_method;
  return config;
}

RunConfig build_run_config(const KeyValues& values, Command command) {
  const Reader read(values);
  RunConfig config;

  // Costs come first so a config with no costs reports a cost field.
  config.costs.dispatch_cost = read.required<double>("dispatch_cost");
  config.costs.unit_transport_cost = read.required<double>("transport_cost_per_unit");
  config.costs.holding_rate = read.required<double>("holding_rate");
  config.costs.failure_penalty = read.required<double>("penalty_cost");
  config.costs.reorder_cost = read.required<double>("reorder_cost");
  require_nonnegative("dispatch_cost", config.costs.dispatch_cost);
  require_nonnegative("transport_cost_per_unit", config.costs.unit_transport_cost);
  require_nonnegative("penalty_cost", config.costs.failure_penalty);
  require_nonnegative("holding_rate", config.costs.holding_rate);
  require_nonnegative("reorder_cost", config.costs.reorder_cost);
  require_positive("holding_rate", config.costs.holding_rate);
  require_positive("reorder_cost", config.costs.reorder_cost);

  const bool sweep = command == Command::sweep;
  if (sweep) {
    if (const auto text = read.raw("n_values")) {
      config.n_values = parse_list<long long>("n_values", *text);
    } else {
      config.n_values = {read.required<long long>("n_required")};
    }
    if (const auto text = read.raw("t_values")) {
      config.t_values = parse_list<double>("t_values", *text);
    } else {
      config.t_values = {read.required<double>("max_time")};
    }
    if (const auto text = read.raw("lambda_values")) {
      config.lambda_values = parse_list<double>("lambda_values", *text);
    } else {
      config.lambda_values = {read.required<double>("arrival_rate")};
    }
    for (long long n : config.n_values) {
      if (n < 1) throw ConfigError("sweep.n_values", "entries must be >= 1");
    }
    for (double t : config.t_values) require_positive("t_values", t);
    for (double l : config.lambda_values) {
      require_positive("lambda_values", l);
      if (!std::isfinite(l)) throw ConfigError("sweep.lambda_values", "entries must be finite");
    }
    config.include_simulation = read.raw("include_simulation") ? parse_bool("include_simulation", *read.raw("include_simulation")) : false;
  } else {
    config.auction.n_required = read.required<long long>("n_required");
    config.auction.max_time = read.required<double>("max_time");
    config.auction.arrival_rate = read.required<double>("arrival_rate");
    if (config.auction.n_required < 1) throw ConfigError("auction.n_required", "must be >= 1");
    require_positive("max_time", config.auction.max_time);
    require_positive("arrival_rate", config.auction.arrival_rate);
    if (!std::isfinite(config.auction.arrival_rate)) throw ConfigError("auction.arrival_rate", "must be finite");
  }

  if (const auto q = read.number<double>("quantity")) {
    require_positive("quantity", *q);
    if (!std::isfinite(*q)) throw ConfigError("policy.quantity", "must be finite");
    config.quantity = *q;
  }
  if (auto mode = read.choice("td_mode", parse_td_mode)) config.td_mode = *mode;
  if (auto mode = read.choice("a_mode", parse_a_mode)) config.a_mode = *mode;
  if (auto rule = read.choice("shortfall_rule", parse_shortfall_rule)) config.shortfall_rule = *rule;
  if (auto method = read.choice("draw_method", parse_draw_method)) config.draw_method = *method;

  if (const auto cycles = read.number<long long>("num_cycles")) {
    if (*cycles < 1) throw ConfigError("simulation.num_cycles", "must be >= 1");
    config.num_cycles = static_cast<std::uint64_t>(*cycles);
  }
  if (const auto reps = read.number<long long>("replications")) {
    if (*reps < 1) throw ConfigError("simulation.replications", "must be >= 1");
    config.replications = static_cast<std::uint64_t>(*reps);
  }
  if (const auto seed = read.number<std::uint64_t>("seed")) config.seed = *seed;
  if (const auto log = read.raw("event_log")) config.event_log = std::string(*log);

  if (const auto format = read.raw("format")) config.format = std::string(*format);
  (void)read.choice("format", parse_report_format);
  if (const auto path = read.raw("path")) config.path = std::string(*path);

  const bool simulates = command == Command::simulate || command == Command::validate;
  if (simulates && config.auction.unbounded()) {
    throw ConfigError("auction.max_time", "simulation requires a finite max_time");
  }
  if (command == Command::simulate && !config.quantity) {
    throw ConfigError("policy.quantity", "required for simulate");
  }
  if (simulates && config.shortfall_rule == ShortfallRule::carry_shortfall && config.quantity &&
      *config.quantity < static_cast<double>(config.auction.n_required)) {
    throw ConfigError("policy.quantity", "carry_shortfall requires quantity >= n_required");
  }
  return config;
}

}  // namespace gbinv::cli
