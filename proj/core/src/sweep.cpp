#include "gbinv/sweep.hpp"

#include <algorithm>
#include <exception>

#include "gbinv/errors.hpp"
#include "parallel.hpp"

namespace gbinv {

void validate(const SweepSpec& spec) {
  if (spec.n_values.empty()) throw ParameterError("sweep: n_values must not be empty");
  if (spec.t_values.empty()) throw ParameterError("sweep: t_values must not be empty");
  if (spec.lambda_values.empty()) throw ParameterError("sweep: lambda_values must not be empty");
  validate(spec.costs);
}

namespace {

SweepRow evaluate_cell(const SweepSpec& spec, long long n, double t, double lambda) {
  SweepRow row;
  row.n = n;
  row.t = t;
  row.lambda = lambda;
  try {
    const AuctionParams auction{n, t, lambda};
    const AuctionStatistics stats = compute_statistics(auction);
    row.p_success = stats.p_success;
    row.dispatch_time = stats.dispatch_time(spec.td_mode);
    row.q_star_real = optimal_quantity(stats, spec.costs, spec.td_mode);
    row.q_star_integer = best_integer_quantity(stats, spec.costs, spec.td_mode);
    row.optimal_cost = optimal_cost(stats, spec.costs, spec.td_mode);
    if (spec.simulation) {
      const Policy policy{static_cast<double>(row.q_star_integer)};
      const SimulationResult sim = simulate(auction, spec.costs, policy, *spec.simulation);
      const double analytic = long_run_average_cost(stats, spec.costs, policy, spec.td_mode, AMode::exact);
      row.simulation = SweepSimulation{sim.long_run_cost.value, sim.long_run_cost.half_width,
                                       sim.long_run_cost.value - analytic};
    }
  } catch (const std::exception& e) {
    SweepRow failed;
    failed.n = n;
    failed.t = t;
    failed.lambda = lambda;
    failed.error = e.what();
    return failed;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  auto n_values = spec.n_values;
  auto t_values = spec.t_values;
  auto lambda_values = spec.lambda_values;
  std::sort(n_values.begin(), n_values.end());
  std::sort(t_values.begin(), t_values.end());
  std::sort(lambda_values.begin(), lambda_values.end());

  const std::size_t nt = t_values.size();
  const std::size_t nl = lambda_values.size();
  std::vector<SweepRow> rows(n_values.size() * nt * nl);
  detail::parallel_for(rows.size(), [&](std::size_t idx) {
    const std::size_t i = idx / (nt * nl);
    const std::size_t j = (idx / nl) % nt;
    const std::size_t k = idx % nl;
    rows[idx] = evaluate_cell(spec, n_values[i], t_values[j], lambda_values[k]);
  });
  return rows;
}

std::size_t count_errors(const std::vector<SweepRow>& rows) {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.error.has_value(); }));
}

}  // namespace gbinv
