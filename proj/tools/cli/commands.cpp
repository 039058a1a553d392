#include "commands.hpp"

#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbinv/cost_model.hpp"
#include "gbinv/errors.hpp"
#include "gbinv/simulator.hpp"
#include "gbinv/stochastics.hpp"
#include "gbinv/sweep.hpp"

namespace gbinv::cli {
namespace {

std::string printf_string(const char* format, ...) __attribute__((format(printf, 1, 2)));

std::string printf_string(const char* format, ...) {
  std::va_list args;
  va_start(args, format);
  std::va_list copy;
  va_copy(copy, args);
  const int size = std::vsnprintf(nullptr, 0, format, copy);
  va_end(copy);
  std::string out(static_cast<std::size_t>(size) + 1, '\0');
  std::vsnprintf(out.data(), out.size(), format, args);
  va_end(args);
  out.pop_back();
  return out;
}

// Aligned "label  rounded  full" row.
std::string value_row(const char* label, double value, int decimals) {
  return printf_string("  %-38s %14.*f   %.10g\n", label, decimals, value, value);
}

std::string header(const char* command, const RunConfig& config) {
  std::string out = printf_string("# gbinv %s\n", command);
  out += printf_string("td_mode: %s  a_mode: %s\n", std::string(to_string(config.td_mode)).c_str(),
                       std::string(to_string(config.a_mode)).c_str());
  return out;
}

std::string describe_inputs(const AuctionParams& auction, const CostParams& costs) {
  std::string out = printf_string("auction: N=%lld T=%.10g lambda=%.10g\n", auction.n_required, auction.max_time,
                                  auction.arrival_rate);
  out += printf_string("costs: D=%.10g F=%.10g I=%.10g C_p=%.10g K=%.10g\n", costs.dispatch_cost,
                       costs.unit_transport_cost, costs.holding_rate, costs.failure_penalty, costs.reorder_cost);
  return out;
}

std::string breakdown_table(const CostBreakdown& b) {
  const auto row = [&](const char* name, double per_cycle) {
    return printf_string("  %-22s %16.6f %16.6f\n", name, per_cycle, per_cycle / b.cycle_length);
  };
  std::string out = printf_string("  %-22s %16s %16s\n", "item", "per cycle", "per unit time");
  out += row("holding", b.holding);
  out += row("dispatching", b.dispatching);
  out += row("transport", b.transport);
  out += row("failure penalty", b.penalty);
  out += row("reorder", b.reorder);
  out += row("total", b.cycle_total);
  out += printf_string("  dispatches per cycle A = %.6f, cycle length = %.6f\n", b.dispatches_per_cycle,
                       b.cycle_length);
  return out;
}

std::string estimate_row(const char* label, const Estimate& e) {
  return printf_string("  %-28s %16.8g  (se %.4g)\n", label, e.value, e.std_error);
}

// Reference values for N in {80, 100, 120} (rows) x T in {6, 7, 8} (columns),
// lambda = 14 and the base cost set below.
constexpr std::array<long long, 3> kRefN{80, 100, 120};
constexpr std::array<double, 3> kRefT{6.0, 7.0, 8.0};
constexpr double kRefLambda = 14.0;
constexpr std::array<std::array<double, 3>, 3> kRefP{{{0.6834, 0.9723, 0.9994},
                                                      {0.0484, 0.4333, 0.8826},
                                                      {0.0001, 0.0172, 0.2368}}};
constexpr std::array<std::array<double, 3>, 3> kRefTd{{{8.3539, 5.9060, 5.7192},
                                                       {123.94, 15.938, 8.1614},
                                                       {46989.0, 406.81, 33.681}}};
constexpr std::array<std::array<long long, 3>, 3> kRefQ{{{536, 637, 648}, {156, 434, 606}, {9, 94, 327}}};
constexpr std::array<std::array<double, 3>, 3> kRefCost{{{53.9714, 72.8599, 74.9544},
                                                         {9.1673, 37.4780, 65.9756},
                                                         {3.0524, 5.7391, 23.8377}}};
constexpr CostParams kRefCosts{40.0, 4.0, 0.02, 10.0, 300.0};
constexpr double kRefBaseCost = 37.47802;

struct CheckEntry {
  enum class Kind { pass, fail, info } kind;
  std::string name;
  std::string detail;
};

class CheckLog {
 public:
  void check(bool ok, std::string name, std::string detail) {
    entries_.push_back({ok ? CheckEntry::Kind::pass : CheckEntry::Kind::fail, std::move(name), std::move(detail)});
  }
  void info(std::string name, std::string detail) {
    entries_.push_back({CheckEntry::Kind::info, std::move(name), std::move(detail)});
  }
  [[nodiscard]] bool all_passed() const {
    for (const auto& e : entries_) {
      if (e.kind == CheckEntry::Kind::fail) return false;
    }
    return true;
  }
  [[nodiscard]] std::string render() const {
    std::string out;
    std::size_t pass = 0, fail = 0, info = 0;
    for (const auto& e : entries_) {
      const char* tag = e.kind == CheckEntry::Kind::pass ? "PASS" : e.kind == CheckEntry::Kind::fail ? "FAIL" : "INFO";
      (e.kind == CheckEntry::Kind::pass ? pass : e.kind == CheckEntry::Kind::fail ? fail : info)++;
      out += printf_string("[%s] %-40s %s\n", tag, e.name.c_str(), e.detail.c_str());
    }
    out += printf_string("\nsummary: %zu passed, %zu failed, %zu informational\n", pass, fail, info);
    return out;
  }

 private:
  std::vector<CheckEntry> entries_;
};

void reference_checks(CheckLog& log) {
  const AuctionStatistics base = compute_statistics({100, 7.0, 14.0});
  const double q_star = optimal_quantity(base, kRefCosts, TdMode::paper);
  log.check(std::abs(base.p_success - 0.4333) <= 5e-5, "base.p_success",
            printf_string("%.6f vs 0.4333 (tol 5e-5)", base.p_success));
  log.check(std::abs(base.e_min_duration - 6.7829) <= 1e-3, "base.truncated_mean_duration",
            printf_string("%.6f vs 6.7829 (tol 1e-3)", base.e_min_duration));
  log.check(std::abs(base.dispatch_time_paper - 15.9376) <= 1e-3, "base.dispatch_time_paper",
            printf_string("%.6f vs 15.9376 (tol 1e-3)", base.dispatch_time_paper));
  log.check(std::abs(q_star - 433.8597) <= 0.01, "base.q_star", printf_string("%.6f vs 433.8597 (tol 0.01)", q_star));
  const long long q_int = best_integer_quantity(base, kRefCosts, TdMode::paper);
  log.check(q_int == 434, "base.best_integer_quantity", printf_string("%lld vs 434", q_int));
  const double c_star = optimal_cost(base, kRefCosts, TdMode::paper);
  log.info("base.optimal_cost_level",
           printf_string("computed %.6f, reference %.5f, delta %+.6f", c_star, kRefBaseCost, c_star - kRefBaseCost));

  for (std::size_t i = 0; i < kRefN.size(); ++i) {
    for (std::size_t j = 0; j < kRefT.size(); ++j) {
      const long long n = kRefN[i];
      const double t = kRefT[j];
      const std::string cell = printf_string("grid[N=%lld,T=%g]", n, t);
      const AuctionStatistics stats = compute_statistics({n, t, kRefLambda});
      const double td = stats.dispatch_time_paper;
      const double q = optimal_quantity(stats, kRefCosts, TdMode::paper);
      const bool extreme = n == 120 && t == 6.0;

      log.check(std::abs(stats.p_success - kRefP[i][j]) <= 5e-5, cell + ".p_success",
                printf_string("%.6g vs %.4f", stats.p_success, kRefP[i][j]));
      const double td_rel = std::abs(td - kRefTd[i][j]) / kRefTd[i][j];
      const double td_tol = extreme ? 0.05 : 0.01;
      log.check(td_rel <= td_tol, cell + ".dispatch_time",
                printf_string("%.6g vs %.6g (rel %.2e, tol %.0e)", td, kRefTd[i][j], td_rel, td_tol));
      const long long q_near = std::llround(q);
      const long long q_slack = extreme ? 1 : 0;
      log.check(std::llabs(q_near - kRefQ[i][j]) <= q_slack, cell + ".q_star",
                printf_string("round(%.4f) = %lld vs %lld", q, q_near, kRefQ[i][j]));

      const double c_star = optimal_cost(stats, kRefCosts, TdMode::paper);
      const double c_at = long_run_average_cost(stats, kRefCosts, Policy{q}, TdMode::paper, AMode::approx);
      const double rel = std::abs(c_star - c_at) / c_at;
      log.check(rel <= 1e-9, cell + ".cost_self_consistency", printf_string("rel diff %.2e (tol 1e-9)", rel));
      const long long q_int = best_integer_quantity(stats, kRefCosts, TdMode::paper);
      const double c_int = long_run_average_cost(stats, kRefCosts, Policy{static_cast<double>(q_int)},
                                                 TdMode::paper, AMode::approx);
      long long cheaper = 0;
      for (long long k = std::max(1LL, static_cast<long long>(std::floor(q)) - 50);
           k <= static_cast<long long>(std::ceil(q)) + 50; ++k) {
        if (long_run_average_cost(stats, kRefCosts, Policy{static_cast<double>(k)}, TdMode::paper, AMode::approx) <
            c_int) {
          cheaper = k;
          break;
        }
      }
      log.check(cheaper == 0, cell + ".integer_scan",
                cheaper == 0 ? printf_string("Q=%lld is the cheapest integer within +-50", q_int)
                             : printf_string("Q=%lld is cheaper than %lld", cheaper, q_int));
      log.info(cell + ".optimal_cost_level",
               printf_string("computed %.6f, reference %.4f, delta %+.4f", c_star, kRefCost[i][j],
                             c_star - kRefCost[i][j]));
    }
  }

  const AuctionStatistics long_horizon = compute_statistics({100, 1e5, 14.0});
  const double q_long = optimal_quantity(long_horizon, kRefCosts, TdMode::paper);
  const double eoq = eoq_limit(kRefCosts, 14.0);
  const double eoq_rel = std::abs(q_long - eoq) / eoq;
  log.check(eoq_rel <= 1e-3, "eoq_limit.large_T",
            printf_string("Q*(T=1e5) = %.6f vs EOQ %.6f (rel %.2e, tol 1e-3)", q_long, eoq, eoq_rel));
}

void property_checks(CheckLog& log, const RunConfig& config, const AuctionStatistics& stats) {
  const double q_star = optimal_quantity(stats, config.costs, config.td_mode);
  bool convex = true;
  for (double q : {q_star / 10.0, q_star, q_star * 10.0}) {
    convex = convex && cost_derivatives(stats, config.costs, Policy{q}, config.td_mode).second > 0.0;
  }
  log.check(convex, "config.convexity", "C''(Q) > 0 at Q*/10, Q*, 10 Q*");
  const double slope = cost_derivatives(stats, config.costs, Policy{q_star}, config.td_mode).first;
  log.check(std::abs(slope) < 1e-9 * config.costs.holding_rate, "config.stationarity",
            printf_string("C'(Q*) = %.3e", slope));
  CostParams perturbed = config.costs;
  perturbed.dispatch_cost = perturbed.dispatch_cost * 3.0 + 7.0;
  perturbed.unit_transport_cost = perturbed.unit_transport_cost * 0.5 + 1.0;
  perturbed.failure_penalty = perturbed.failure_penalty * 2.0 + 5.0;
  const double q_perturbed = optimal_quantity(stats, perturbed, config.td_mode);
  log.check(q_perturbed == q_star, "config.q_star_independent_of_D_F_Cp",
            printf_string("%.17g vs %.17g", q_perturbed, q_star));
}

void simulation_checks(CheckLog& log, const RunConfig& config, const AuctionStatistics& stats) {
  const double quantity = config.quantity ? *config.quantity
                                          : static_cast<double>(best_integer_quantity(stats, config.costs, config.td_mode));
  const SimulationResult sim = simulate(config.auction, config.costs, Policy{quantity}, config.simulation_config());
  const AnalyticComparison exact =
      compare_to_analytic(sim, stats, config.costs, Policy{quantity}, TdMode::consistent, AMode::exact);
  const AnalyticComparison paper =
      compare_to_analytic(sim, stats, config.costs, Policy{quantity}, TdMode::paper, AMode::approx);
  const std::string setup = printf_string("Q=%.10g, %llu cycles, seed %llu", quantity,
                                          static_cast<unsigned long long>(config.num_cycles),
                                          static_cast<unsigned long long>(config.seed));
  log.info("simulation.setup", setup);
  log.check(std::abs(exact.p_delta_se) <= 3.0, "simulation.p_success",
            printf_string("p_hat %.6f vs %.6f (%+.2f SE)", sim.p_hat.value, exact.analytic_p, exact.p_delta_se));
  log.check(std::abs(exact.dispatch_delta_se) <= 3.0, "simulation.dispatch_time_consistent",
            printf_string("%.6f vs %.6f (%+.2f SE)", sim.mean_dispatch_interval.value, exact.analytic_dispatch_time,
                          exact.dispatch_delta_se));
  log.check(std::abs(exact.cost_delta_se) <= 3.0, "simulation.long_run_cost_exact_A",
            printf_string("%.6f vs %.6f (%+.2f SE)", sim.long_run_cost.value, exact.analytic_cost,
                          exact.cost_delta_se));
  log.info("simulation.dispatch_time_paper",
           printf_string("simulated %.6f vs paper-mode %.6f (%+.2f SE)", sim.mean_dispatch_interval.value,
                         paper.analytic_dispatch_time, paper.dispatch_delta_se));
  log.info("simulation.long_run_cost_paper_approx",
           printf_string("simulated %.6f vs paper-mode approx-A %.6f (%+.2f SE)", sim.long_run_cost.value,
                         paper.analytic_cost, paper.cost_delta_se));
}

}  // namespace

CommandOutput cmd_optimize(const RunConfig& config) {
  const AuctionStatistics stats = compute_statistics(config.auction);
  std::string out = header("optimize", config);
  out += describe_inputs(config.auction, config.costs);
  out += "\n";
  out += printf_string("  %-38s %14s   %s\n", "quantity", "rounded", "full precision");
  out += value_row("success probability p_T", stats.p_success, 4);
  out += value_row("truncated mean E[min(S_N,T)]", stats.e_min_duration, 4);
  out += value_row("conditional mean E[S_N | S_N<T]", stats.e_cond_duration, 4);
  out += value_row("expected failures per dispatch", stats.expected_failures, 4);
  out += value_row("dispatch time T_d (paper)", stats.dispatch_time_paper, 4);
  out += value_row("dispatch time T_d (consistent)", stats.dispatch_time_consistent, 4);

  const double q_star = optimal_quantity(stats, config.costs, config.td_mode);
  const long long q_int = best_integer_quantity(stats, config.costs, config.td_mode);
  out += value_row("optimal quantity Q*", q_star, 4);
  out += printf_string("  %-38s %14lld\n", "best integer quantity", q_int);
  out += value_row("optimal cost C(Q*)", optimal_cost(stats, config.costs, config.td_mode), 4);
  out += value_row("cost at best integer quantity",
                   long_run_average_cost(stats, config.costs, Policy{static_cast<double>(q_int)}, config.td_mode,
                                         AMode::approx),
                   4);
  if (config.auction.unbounded()) {
    out += value_row("EOQ limit sqrt(2 K lambda / I)", eoq_limit(config.costs, config.auction.arrival_rate), 4);
  }
  if (config.quantity) {
    out += value_row("cost at configured quantity",
                     long_run_average_cost(stats, config.costs, Policy{*config.quantity}, config.td_mode,
                                           config.a_mode),
                     4);
  }

  out += printf_string("\ncost breakdown at Q* (td_mode=%s, a_mode=%s)\n", std::string(to_string(config.td_mode)).c_str(),
                       std::string(to_string(config.a_mode)).c_str());
  out += breakdown_table(cycle_cost_breakdown(stats, config.costs, Policy{q_star}, config.td_mode, config.a_mode));
  return {out, {}, kExitOk};
}

CommandOutput cmd_simulate(const RunConfig& config) {
  if (!config.quantity) throw ConfigError("policy.quantity", "required for simulate");
  const Policy policy{*config.quantity};
  const AuctionStatistics stats = compute_statistics(config.auction);
  const SimulationConfig sim_config = config.simulation_config();

  std::optional<std::ofstream> log_file;
  SimulationConfig first_config = sim_config;
  if (config.event_log) {
    log_file.emplace(*config.event_log);
    if (!*log_file) throw ConfigError("simulation.event_log", "cannot open '" + *config.event_log + "'");
    first_config.event_log = &*log_file;
  }
  std::vector<SimulationResult> runs;
  runs.push_back(simulate(config.auction, config.costs, policy, first_config));
  if (config.replications > 1) {
    auto rest = replicate(config.auction, config.costs, policy, sim_config, config.replications);
    runs.assign(rest.begin(), rest.end());
  }
  const SimulationResult& sim = runs.front();

  std::string out = header("simulate", config);
  out += printf_string("shortfall_rule: %s  draw_method: %s  seed: %llu  cycles: %llu  replications: %llu\n",
                       std::string(to_string(config.shortfall_rule)).c_str(),
                       std::string(to_string(config.draw_method)).c_str(),
                       static_cast<unsigned long long>(config.seed),
                       static_cast<unsigned long long>(config.num_cycles),
                       static_cast<unsigned long long>(config.replications));
  out += describe_inputs(config.auction, config.costs);
  out += printf_string("policy: Q=%.10g\n\n", policy.quantity);

  out += "simulation (replication 0)\n";
  out += printf_string("  auctions %llu, successes %llu, failures %llu, dispatches %llu, cycles %llu\n",
                       static_cast<unsigned long long>(sim.counts.auctions),
                       static_cast<unsigned long long>(sim.counts.successes),
                       static_cast<unsigned long long>(sim.counts.failures),
                       static_cast<unsigned long long>(sim.counts.dispatches),
                       static_cast<unsigned long long>(sim.counts.cycles));
  out += estimate_row("success rate p_hat", sim.p_hat);
  out += estimate_row("mean dispatch interval", sim.mean_dispatch_interval);
  out += estimate_row("mean cycle length", sim.mean_cycle_length);
  out += estimate_row("mean cycle cost", sim.mean_cycle_cost);
  out += printf_string("  %-28s %16.8g  (se %.4g, 95%% half-width %.4g)\n", "long-run cost", sim.long_run_cost.value,
                       sim.long_run_cost.std_error, sim.long_run_cost.half_width);
  out += printf_string("  total cost %.10g over total time %.10g\n\n", sim.total_cost, sim.total_time);

  out += "analytic comparison (delta = simulated - analytic, in standard errors)\n";
  out += printf_string("  %-10s %-6s %12s %12s %12s %9s %9s %9s\n", "td_mode", "a_mode", "p_T", "T_d", "C(Q)",
                       "d_p", "d_T_d", "d_C");
  bool discrepant_paper = false;
  for (TdMode td : {TdMode::paper, TdMode::consistent}) {
    for (AMode a : {AMode::approx, AMode::exact}) {
      const AnalyticComparison c = compare_to_analytic(sim, stats, config.costs, policy, td, a);
      const bool flag = std::abs(c.dispatch_delta_se) > 3.0 || std::abs(c.cost_delta_se) > 3.0;
      if (flag && td == TdMode::paper) discrepant_paper = true;
      out += printf_string("  %-10s %-6s %12.6f %12.6f %12.6f %+9.2f %+9.2f %+9.2f%s\n",
                           std::string(to_string(td)).c_str(), std::string(to_string(a)).c_str(), c.analytic_p,
                           c.analytic_dispatch_time, c.analytic_cost, c.p_delta_se, c.dispatch_delta_se,
                           c.cost_delta_se, flag ? "  DISCREPANT (>3 SE)" : "");
    }
  }
  if (discrepant_paper) {
    out += "  note: paper-mode analytic values differ from the simulation by more than 3 SE\n";
  }

  if (runs.size() > 1) {
    out += "\nreplications\n";
    out += printf_string("  %-6s %16s %12s %12s\n", "r", "long-run cost", "half-width", "p_hat");
    double mean = 0.0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      out += printf_string("  %-6zu %16.8g %12.4g %12.6f\n", r, runs[r].long_run_cost.value,
                           runs[r].long_run_cost.half_width, runs[r].p_hat.value);
      mean += runs[r].long_run_cost.value;
    }
    mean /= static_cast<double>(runs.size());
    double var = 0.0;
    for (const auto& run : runs) var += (run.long_run_cost.value - mean) * (run.long_run_cost.value - mean);
    var /= static_cast<double>(runs.size() - 1);
    out += printf_string("  mean %.8g, across-replication sd %.4g\n", mean, std::sqrt(var));
  }
  return {out, {}, kExitOk};
}

CommandOutput cmd_sweep(const RunConfig& config) {
  SweepSpec spec;
  spec.n_values = config.n_values;
  spec.t_values = config.t_values;
  spec.lambda_values = config.lambda_values;
  spec.costs = config.costs;
  spec.td_mode = config.td_mode;
  if (config.include_simulation) spec.simulation = config.simulation_config();

  const ReportFormat format = parse_report_format(config.format);
  const auto rows = run_sweep(spec);
  CommandOutput result;
  result.report = emit_report(rows, format, config.td_mode);
  for (const auto& row : rows) {
    if (row.error) {
      result.diagnostics += printf_string("cell N=%lld T=%g lambda=%g failed: %s\n", row.n, row.t, row.lambda,
                                          row.error->c_str());
    }
  }
  result.exit_code = count_errors(rows) > 0 ? kExitPartialGrid : kExitOk;
  return result;
}

CommandOutput cmd_validate(const RunConfig& config) {
  const AuctionStatistics stats = compute_statistics(config.auction);
  CheckLog log;
  reference_checks(log);
  property_checks(log, config, stats);
  log.info("config.duration_semantics",
           printf_string("E[min(S_N,T)] = %.6f vs E[S_N | S_N<T] = %.6f (difference %.6f)", stats.e_min_duration,
                         stats.e_cond_duration, stats.e_min_duration - stats.e_cond_duration));
  log.info("config.dispatch_time_modes",
           printf_string("paper %.6f vs consistent %.6f", stats.dispatch_time_paper, stats.dispatch_time_consistent));
  simulation_checks(log, config, stats);

  std::string out = header("validate", config);
  out += describe_inputs(config.auction, config.costs);
  out += "\n";
  out += log.render();
  return {out, {}, log.all_passed() ? kExitOk : kExitChecksFailed};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Replenishment policy optimization for inventories serving group-buying auctions", "gbinv"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::map<std::string, std::optional<std::string>> key_flags;
  std::optional<std::string> cycles_alias;
  std::optional<std::string> out_alias;
  for (const auto& spec : known_keys()) key_flags[std::string(spec.key)];

  const std::array<std::pair<const char*, const char*>, 4> commands{{
      {"optimize", "closed-form statistics, optimal quantity and cost breakdown"},
      {"simulate", "Monte Carlo simulation with analytic comparison"},
      {"sweep", "grid evaluation over n_values x t_values x lambda_values"},
      {"validate", "reference checks, properties and simulation cross-checks"},
  }};
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("config", config_path, "configuration file (key = value lines)");
    for (auto& [key, slot] : key_flags) {
      sub->add_option("--" + key, slot, "override '" + key + "'");
    }
    sub->add_option("--cycles", cycles_alias, "alias of --num_cycles");
    sub->add_option("--out", out_alias, "alias of --path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  const std::string command_name = app.get_subcommands().front()->get_name();
  const Command command = command_name == "optimize"   ? Command::optimize
                          : command_name == "simulate" ? Command::simulate
                          : command_name == "sweep"    ? Command::sweep
                                                       : Command::validate;
  try {
    KeyValues values = config_path ? read_config_file(*config_path) : KeyValues{};
    for (const auto& [key, slot] : key_flags) {
      if (slot) values[key] = *slot;
    }
    if (cycles_alias) values["num_cycles"] = *cycles_alias;
    if (out_alias) values["path"] = *out_alias;

    const RunConfig config = build_run_config(values, command);
    CommandOutput result;
    switch (command) {
      case Command::optimize:
        result = cmd_optimize(config);
        break;
      case Command::simulate:
        result = cmd_simulate(config);
        break;
      case Command::sweep:
        result = cmd_sweep(config);
        break;
      case Command::validate:
        result = cmd_validate(config);
        break;
    }
    if (config.path) {
      std::ofstream file(*config.path, std::ios::binary);
      if (!file) throw ConfigError("output.path", "cannot open '" + *config.path + "' for writing");
      file << result.report;
    } else {
      out << result.report;
    }
    err << result.diagnostics;
    return result.exit_code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParameterError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "numeric domain error: " << e.what() << '\n';
    return kExitNumericError;
  }
}

}  // namespace gbinv::cli
