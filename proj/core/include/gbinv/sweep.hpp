#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbinv/cost_model.hpp"
#include "gbinv/simulator.hpp"
#include "gbinv/stochastics.hpp"

namespace gbinv {

struct SweepSpec {
  std::vector<long long> n_values;
  std::vector<double> t_values;
  std::vector<double> lambda_values;
  CostParams costs;
  TdMode td_mode = TdMode::paper;
  // When set, every cell is also simulated at its integer optimum.
  std::optional<SimulationConfig> simulation;
};

struct SweepSimulation {
  double long_run_cost = 0.0;
  double half_width = 0.0;
  // Simulated minus analytic exact-A cost at q_star_integer (spec td_mode).
  double delta = 0.0;
};

struct SweepRow {
  long long n = 0;
  double t = 0.0;
  double lambda = 0.0;
  double p_success = 0.0;
  double dispatch_time = 0.0;
  double q_star_real = 0.0;
  long long q_star_integer = 0;
  double optimal_cost = 0.0;
  std::optional<SweepSimulation> simulation;
  // Set when the cell could not be evaluated; numeric fields are then unset.
  std::optional<std::string> error;
};

/// Throws ParameterError for empty grids or invalid costs.
void validate(const SweepSpec& spec);

/// One row per (n, t, lambda), lexicographic in that order. Cells are
/// evaluated concurrently; a failing cell yields a row with `error` set
/// instead of aborting the grid.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec& spec);

[[nodiscard]] std::size_t count_errors(const std::vector<SweepRow>& rows);

enum class ReportFormat { csv, json, markdown };

/// Accepts "csv", "json", "markdown" (or "md"); ParameterError otherwise.
[[nodiscard]] ReportFormat parse_report_format(std::string_view name);

/// Column order of the CSV header and key order of the JSON objects.
inline constexpr std::string_view kReportColumns =
    "n,t,lambda,p_success,dispatch_time,q_star_real,q_star_integer,optimal_cost,sim_cost,sim_halfwidth,delta";

/// Six significant digits, shortest form, ties to even ("%.6g").
[[nodiscard]] std::string format_significant(double value);

/// CSV: header + one line per row; absent simulation fields are empty and
/// failed cells carry the literal `error` in every computed column.
/// JSON: array of objects keyed like the CSV header, numbers rounded to six
/// significant digits, null where the CSV cell is empty or `error`.
/// Markdown: per arrival rate, one grid per quantity with rows N and
/// columns T. `td_mode` is printed in the markdown header when given.
/// Throws ParameterError on empty input.
[[nodiscard]] std::string emit_report(const std::vector<SweepRow>& rows, ReportFormat format,
                                      std::optional<TdMode> td_mode = std::nullopt);

}  // namespace gbinv
