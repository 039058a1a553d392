#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "gbinv/errors.hpp"
#include "gbinv/sweep.hpp"

namespace gbinv {
namespace {

constexpr std::string_view kErrorCell = "error";

// Cells in kReportColumns order; empty string for absent values.
std::vector<std::string> row_cells(const SweepRow& row) {
  std::vector<std::string> cells{std::to_string(row.n), format_significant(row.t), format_significant(row.lambda)};
  if (row.error) {
    cells.insert(cells.end(), 8, std::string(kErrorCell));
    return cells;
  }
  cells.push_back(format_significant(row.p_success));
  cells.push_back(format_significant(row.dispatch_time));
  cells.push_back(format_significant(row.q_star_real));
  cells.push_back(std::to_string(row.q_star_integer));
  cells.push_back(format_significant(row.optimal_cost));
  if (row.simulation) {
    cells.push_back(format_significant(row.simulation->long_run_cost));
    cells.push_back(format_significant(row.simulation->half_width));
    cells.push_back(format_significant(row.simulation->delta));
  } else {
    cells.insert(cells.end(), 3, std::string());
  }
  return cells;
}

std::vector<std::string> column_names() {
  std::vector<std::string> names;
  std::string_view rest = kReportColumns;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    names.emplace_back(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return names;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
  std::string out(kReportColumns);
  out += '\n';
  for (const auto& row : rows) {
    const auto cells = row_cells(row);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  }
  return out;
}

std::string emit_json(const std::vector<SweepRow>& rows) {
  const auto names = column_names();
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const auto cells = row_cells(row);
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string& cell = cells[i];
      if (cell.empty() || cell == kErrorCell) {
        object[names[i]] = nullptr;
      } else if (names[i] == "n" || names[i] == "q_star_integer") {
        object[names[i]] = std::strtoll(cell.c_str(), nullptr, 10);
      } else {
        object[names[i]] = std::strtod(cell.c_str(), nullptr);
      }
    }
    array.push_back(std::move(object));
  }
  return array.dump(2) + "\n";
}

struct Grid {
  const char* title;
  std::function<std::string(const SweepRow&)> cell;
};

std::string emit_markdown(const std::vector<SweepRow>& rows, std::optional<TdMode> td_mode) {
  std::set<double> lambdas;
  std::set<long long> ns;
  std::set<double> ts;
  std::map<std::tuple<double, long long, double>, const SweepRow*> lookup;
  bool has_simulation = false;
  for (const auto& row : rows) {
    lambdas.insert(row.lambda);
    ns.insert(row.n);
    ts.insert(row.t);
    lookup.emplace(std::tuple{row.lambda, row.n, row.t}, &row);
    has_simulation = has_simulation || row.simulation.has_value();
  }

  std::vector<Grid> grids{
      {"(a) success probability p_T", [](const SweepRow& r) { return format_significant(r.p_success); }},
      {"(b) expected dispatch time T_d", [](const SweepRow& r) { return format_significant(r.dispatch_time); }},
      {"(c) optimal integer quantity Q*", [](const SweepRow& r) { return std::to_string(r.q_star_integer); }},
      {"(d) optimal long-run cost C(Q*)", [](const SweepRow& r) { return format_significant(r.optimal_cost); }},
  };
  if (has_simulation) {
    grids.push_back({"(e) simulated long-run cost at integer Q* (95% half-width)", [](const SweepRow& r) {
                       if (!r.simulation) return std::string();
                       return format_significant(r.simulation->long_run_cost) + " ± " +
                              format_significant(r.simulation->half_width);
                     }});
  }

  std::ostringstream out;
  out << "# Replenishment sweep\n\n";
  if (td_mode) out << "td_mode: " << to_string(*td_mode) << ", a_mode: approx\n\n";
  for (double lambda : lambdas) {
    out << "## lambda = " << format_significant(lambda) << "\n\n";
    for (const auto& grid : grids) {
      out << "### " << grid.title << "\n\n| N \\ T |";
      for (double t : ts) out << ' ' << format_significant(t) << " |";
      out << "\n|---|";
      for (std::size_t i = 0; i < ts.size(); ++i) out << "---|";
      out << '\n';
      for (long long n : ns) {
        out << "| " << n << " |";
        for (double t : ts) {
          const auto it = lookup.find({lambda, n, t});
          std::string cell;
          if (it != lookup.end()) cell = it->second->error ? std::string(kErrorCell) : grid.cell(*it->second);
          out << ' ' << cell << " |";
        }
        out << '\n';
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string format_significant(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw ParameterError("unsupported report format '" + std::string(name) + "' (expected csv, json or markdown)");
}

std::string emit_report(const std::vector<SweepRow>& rows, ReportFormat format, std::optional<TdMode> td_mode) {
  if (rows.empty()) throw ParameterError("emit_report: no rows");
  switch (format) {
    case ReportFormat::csv:
      return emit_csv(rows);
    case ReportFormat::json:
      return emit_json(rows);
    case ReportFormat::markdown:
      return emit_markdown(rows, td_mode);
  }
  throw ParameterError("unsupported report format");
}

}  // namespace gbinv
