#include "gbinv/cost_model.hpp"

#include <cmath>
#include <string>

#include "gbinv/errors.hpp"

namespace gbinv {
namespace {

void require_finite_nonnegative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be finite and nonnegative");
  }
}

void require_optimizable(const CostParams& costs) {
  validate(costs);
  if (!(costs.holding_rate > 0.0)) throw ParameterError("holding_rate must be > 0 to optimize Q");
  if (!(costs.reorder_cost > 0.0)) throw ParameterError("reorder_cost must be > 0 to optimize Q");
}

void require_quantity(Policy policy) {
  if (!(policy.quantity > 0.0) || !std::isfinite(policy.quantity)) {
    throw ParameterError("replenishment quantity must be positive and finite");
  }
}

double n_of(const AuctionStatistics& stats) { return static_cast<double>(stats.params.n_required); }

}  // namespace

std::string_view to_string(AMode mode) { return mode == AMode::exact ? "exact" : "approx"; }

AMode parse_a_mode(std::string_view text) {
  if (text == "exact") return AMode::exact;
  if (text == "approx") return AMode::approx;
  throw ParameterError("a_mode must be 'exact' or 'approx', got '" + std::string(text) + "'");
}

void validate(const CostParams& costs) {
  require_finite_nonnegative(costs.dispatch_cost, "dispatch_cost");
  require_finite_nonnegative(costs.unit_transport_cost, "unit_transport_cost");
  require_finite_nonnegative(costs.holding_rate, "holding_rate");
  require_finite_nonnegative(costs.failure_penalty, "failure_penalty");
  require_finite_nonnegative(costs.reorder_cost, "reorder_cost");
}

double dispatches_per_cycle(double quantity, long long n_required, AMode mode) {
  require_quantity(Policy{quantity});
  if (n_required < 1) throw DomainError("n_required must be >= 1");
  const double ratio = quantity / static_cast<double>(n_required);
  return mode == AMode::exact ? std::ceil(ratio) : ratio;
}

CostBreakdown cycle_cost_breakdown(const AuctionStatistics& stats, const CostParams& costs, Policy policy,
                                   TdMode td_mode, AMode a_mode) {
  validate(costs);
  require_quantity(policy);
  const double n = n_of(stats);
  const double q = policy.quantity;
  const double td = stats.dispatch_time(td_mode);
  const double a = dispatches_per_cycle(q, stats.params.n_required, a_mode);

  CostBreakdown out;
  out.dispatches_per_cycle = a;
  out.cycle_length = a * td;
  // Interval i (1-based) holds Q - (i-1)N units for T_d on average.
  out.holding = a_mode == AMode::approx ? costs.holding_rate * a * td * (q + n) / 2.0
                                        : costs.holding_rate * td * a * (q - (a - 1.0) * n / 2.0);
  out.dispatching = costs.dispatch_cost * a;
  out.transport = costs.unit_transport_cost * a * n;
  out.penalty = costs.failure_penalty * a * stats.expected_failures;
  out.reorder = costs.reorder_cost;
  out.cycle_total = out.holding + out.dispatching + out.transport + out.penalty + out.reorder;
  out.long_run_average = out.cycle_total / out.cycle_length;
  return out;
}

double long_run_average_cost(const AuctionStatistics& stats, const CostParams& costs, Policy policy, TdMode td_mode,
                             AMode a_mode) {
  return cycle_cost_breakdown(stats, costs, policy, td_mode, a_mode).long_run_average;
}

CostDerivatives cost_derivatives(const AuctionStatistics& stats, const CostParams& costs, Policy policy,
                                 TdMode td_mode) {
  validate(costs);
  require_quantity(policy);
  const double q = policy.quantity;
  const double kn_over_td = costs.reorder_cost * n_of(stats) / stats.dispatch_time(td_mode);
  return {costs.holding_rate / 2.0 - kn_over_td / (q * q), 2.0 * kn_over_td / (q * q * q)};
}

double eoq_limit(const CostParams& costs, double arrival_rate) {
  require_optimizable(costs);
  if (!(arrival_rate > 0.0) || !std::isfinite(arrival_rate)) throw ParameterError("arrival_rate must be > 0");
  return std::sqrt(2.0 * costs.reorder_cost * arrival_rate / costs.holding_rate);
}

double optimal_quantity(const AuctionStatistics& stats, const CostParams& costs, TdMode td_mode) {
  require_optimizable(costs);
  if (stats.params.unbounded()) return eoq_limit(costs, stats.params.arrival_rate);
  const double td = stats.dispatch_time(td_mode);
  return std::sqrt(2.0 * costs.reorder_cost * n_of(stats) / (costs.holding_rate * td));
}

double optimal_cost(const AuctionStatistics& stats, const CostParams& costs, TdMode td_mode) {
  require_optimizable(costs);
  const double n = n_of(stats);
  const double td = stats.dispatch_time(td_mode);
  const double i = costs.holding_rate;
  return std::sqrt(2.0 * i * costs.reorder_cost * n / td) + i * n / 2.0 + costs.dispatch_cost / td +
         costs.unit_transport_cost * n / td + costs.failure_penalty * stats.expected_failures / td;
}

long long best_integer_quantity(const AuctionStatistics& stats, const CostParams& costs, TdMode td_mode) {
  const double q_star = optimal_quantity(stats, costs, td_mode);
  const auto lo = static_cast<long long>(std::floor(q_star));
  const auto hi = static_cast<long long>(std::ceil(q_star));
  if (lo < 1) return 1;
  if (lo == hi) return lo;
  const auto cost_at = [&](long long q) {
    return long_run_average_cost(stats, costs, Policy{static_cast<double>(q)}, td_mode, AMode::approx);
  };
  return cost_at(lo) < cost_at(hi) ? lo : hi;
}

}  // namespace gbinv
