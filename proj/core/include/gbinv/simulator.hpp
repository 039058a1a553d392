#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "gbinv/cost_model.hpp"
#include "gbinv/stochastics.hpp"

namespace gbinv {

/// What happens to the units a final, partially covered dispatch could not
/// serve from stock. reset_to_q restores the level to exactly Q;
/// carry_shortfall serves them from the incoming lot, so the next cycle
/// starts at Q minus the shortfall.
enum class ShortfallRule { reset_to_q, carry_shortfall };

/// How the N-th arrival instant of a round is sampled.
enum class DrawMethod { erlang, interarrival_sum };

[[nodiscard]] std::string_view to_string(ShortfallRule rule);
[[nodiscard]] ShortfallRule parse_shortfall_rule(std::string_view text);
[[nodiscard]] std::string_view to_string(DrawMethod method);
[[nodiscard]] DrawMethod parse_draw_method(std::string_view text);

struct SimulationConfig {
  std::uint64_t num_cycles = 100000;
  std::uint64_t seed = 42;
  // Index of the RNG stream derived from seed; replicate() assigns 0..R-1.
  std::uint64_t stream = 0;
  ShortfallRule shortfall_rule = ShortfallRule::reset_to_q;
  TdMode td_mode_for_comparison = TdMode::consistent;
  DrawMethod draw_method = DrawMethod::erlang;
  // Optional line-delimited JSON log, one record per auction round.
  std::ostream* event_log = nullptr;
};

/// Seed of RNG stream `stream` under master seed `seed`:
///   z = seed + (stream + 1) * 0x9E3779B97F4A7C15 (mod 2^64)
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// i.e. one SplitMix64 step. The result seeds a std::mt19937_64. This
/// mapping is part of the reproducibility contract and must not change.
[[nodiscard]] std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct RatioEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double half_width = 0.0;  // 95% normal interval

  friend bool operator==(const RatioEstimate&, const RatioEstimate&) = default;
};

struct SimulationCounts {
  std::uint64_t auctions = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t dispatches = 0;
  std::uint64_t cycles = 0;

  friend bool operator==(const SimulationCounts&, const SimulationCounts&) = default;
};

struct SimulatedCosts {
  double holding = 0.0;
  double dispatching = 0.0;
  double transport = 0.0;
  double penalty = 0.0;
  double reorder = 0.0;

  friend bool operator==(const SimulatedCosts&, const SimulatedCosts&) = default;
};

struct SimulationResult {
  Estimate p_hat;
  Estimate mean_dispatch_interval;
  Estimate mean_cycle_length;
  Estimate mean_cycle_cost;
  RatioEstimate long_run_cost;  // value == total_cost / total_time exactly
  SimulationCounts counts;
  SimulatedCosts cost_totals;
  double total_cost = 0.0;
  double total_time = 0.0;

  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

/// Runs config.num_cycles replenishment cycles of the auction / dispatch /
/// replenish process and returns renewal-reward estimates.
///
/// Each round draws the N-th arrival instant S. If S < T the round succeeds
/// after S time units, N units are dispatched and D + F N is charged;
/// otherwise the round fails after T and C_p is charged. A new round starts
/// immediately either way. Holding accrues as I * level * elapsed time.
/// A dispatch that leaves the level at or below zero closes the cycle and
/// charges K. The long-run cost interval uses the delta method on the iid
/// per-cycle (cost, length) pairs.
///
/// Throws DomainError for an infinite horizon and ParameterError for
/// zero cycles, a non-positive quantity, or carry_shortfall with Q < N.
[[nodiscard]] SimulationResult simulate(const AuctionParams& auction, const CostParams& costs, Policy policy,
                                        const SimulationConfig& config);

/// Replication r runs simulate() on stream r of config.seed. Replications
/// run concurrently; the output is in replication order and independent of
/// scheduling. The event log is not supported here and is ignored.
[[nodiscard]] std::vector<SimulationResult> replicate(const AuctionParams& auction, const CostParams& costs,
                                                      Policy policy, const SimulationConfig& config,
                                                      std::uint64_t num_replications);

/// Simulated estimates against one analytic (td_mode, a_mode) pairing, with
/// deltas expressed in units of the simulation standard error.
struct AnalyticComparison {
  TdMode td_mode = TdMode::consistent;
  AMode a_mode = AMode::exact;
  double analytic_p = 0.0;
  double analytic_dispatch_time = 0.0;
  double analytic_cost = 0.0;
  double p_delta_se = 0.0;
  double dispatch_delta_se = 0.0;
  double cost_delta_se = 0.0;
};

[[nodiscard]] AnalyticComparison compare_to_analytic(const SimulationResult& result, const AuctionStatistics& stats,
                                                     const CostParams& costs, Policy policy, TdMode td_mode,
                                                     AMode a_mode);

}  // namespace gbinv
