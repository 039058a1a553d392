#pragma once

#include <string_view>

#include "gbinv/stochastics.hpp"

namespace gbinv {

/// Dispatches per replenishment cycle: exact is ceil(Q/N), approx is Q/N.
/// All closed forms (C'(Q), Q*, C(Q*)) are derived under approx.
enum class AMode { exact, approx };

[[nodiscard]] std::string_view to_string(AMode mode);
[[nodiscard]] AMode parse_a_mode(std::string_view text);

struct CostParams {
  double dispatch_cost = 0.0;        // D, per dispatch
  double unit_transport_cost = 0.0;  // F, per unit shipped
  double holding_rate = 0.0;         // I, per unit per unit time
  double failure_penalty = 0.0;      // C_p, per non-successful auction
  double reorder_cost = 0.0;         // K, per replenishment
};

/// All coefficients finite and nonnegative. The optimizers additionally
/// require holding_rate > 0 and reorder_cost > 0.
void validate(const CostParams& costs);

struct Policy {
  double quantity = 0.0;  // Q, units per replenishment
};

/// Expected per-cycle costs of one replenishment cycle.
struct CostBreakdown {
  double dispatches_per_cycle = 0.0;
  double cycle_length = 0.0;
  double holding = 0.0;
  double dispatching = 0.0;
  double transport = 0.0;
  double penalty = 0.0;
  double reorder = 0.0;
  double cycle_total = 0.0;
  double long_run_average = 0.0;  // cycle_total / cycle_length
};

struct CostDerivatives {
  double first = 0.0;
  double second = 0.0;
};

[[nodiscard]] double dispatches_per_cycle(double quantity, long long n_required, AMode mode);

// The overloads below read N from stats.params.

[[nodiscard]] CostBreakdown cycle_cost_breakdown(const AuctionStatistics& stats, const CostParams& costs,
                                                 Policy policy, TdMode td_mode, AMode a_mode);

[[nodiscard]] double long_run_average_cost(const AuctionStatistics& stats, const CostParams& costs, Policy policy,
                                           TdMode td_mode, AMode a_mode);

/// C'(Q) = I/2 - KN/(Q^2 T_d) and C''(Q) = 2KN/(Q^3 T_d), approx-A cost.
[[nodiscard]] CostDerivatives cost_derivatives(const AuctionStatistics& stats, const CostParams& costs,
                                               Policy policy, TdMode td_mode);

/// Q* = sqrt(2KN / (I T_d)). Does not depend on D, F or C_p.
/// Routes to eoq_limit when the horizon is infinite.
[[nodiscard]] double optimal_quantity(const AuctionStatistics& stats, const CostParams& costs, TdMode td_mode);

/// C(Q*) = sqrt(2IKN/T_d) + IN/2 + D/T_d + FN/T_d + C_p(1-p)/(p T_d).
[[nodiscard]] double optimal_cost(const AuctionStatistics& stats, const CostParams& costs, TdMode td_mode);

/// Cheaper of floor(Q*) and ceil(Q*) under the approx-A cost; ties go to
/// the larger quantity. Never returns less than 1.
[[nodiscard]] long long best_integer_quantity(const AuctionStatistics& stats, const CostParams& costs,
                                              TdMode td_mode);

/// Classical EOQ sqrt(2 K lambda / I).
[[nodiscard]] double eoq_limit(const CostParams& costs, double arrival_rate);

}  // namespace gbinv
