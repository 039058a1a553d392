#pragma once

#include <limits>
#include <string_view>

namespace gbinv {

/// Which expected dispatch interval to use downstream.
///
/// `paper` solves the dispatch renewal recursion with the truncated mean
/// E[min(S_N, T)] as the success duration, which is how the published
/// numbers are obtained. `consistent` uses the true conditional mean
/// E[S_N | S_N < T] and matches what the simulator realizes.
enum class TdMode { paper, consistent };

[[nodiscard]] std::string_view to_string(TdMode mode);
/// Throws ParameterError for anything other than "paper" / "consistent".
[[nodiscard]] TdMode parse_td_mode(std::string_view text);

/// The seller's auction design.
struct AuctionParams {
  /// Bidders required for a successful auction (N).
  long long n_required = 1;
  /// Auction cutoff (T). +infinity is legal and selects the EOQ limit.
  double max_time = std::numeric_limits<double>::infinity();
  /// Poisson bidder arrival rate (lambda).
  double arrival_rate = 1.0;

  [[nodiscard]] bool unbounded() const noexcept { return max_time == std::numeric_limits<double>::infinity(); }
};

/// Throws DomainError unless n_required >= 1, max_time > 0 and
/// arrival_rate > 0 (all finite except max_time).
void validate(const AuctionParams& params);

/// Auction-level quantities derived from the Poisson arrival process.
struct AuctionStatistics {
  AuctionParams params;
  double p_success = 1.0;                 // P(S_N < T)
  double e_min_duration = 0.0;            // E[min(S_N, T)]
  double e_cond_duration = 0.0;           // E[S_N | S_N < T]
  double expected_failures = 0.0;         // (1 - p) / p
  double dispatch_time_paper = 0.0;       // (1-p)/p * T + E[min(S_N, T)]
  double dispatch_time_consistent = 0.0;  // E[S_N | S_N < T] + (1-p)/p * T

  [[nodiscard]] double dispatch_time(TdMode mode) const noexcept {
    return mode == TdMode::paper ? dispatch_time_paper : dispatch_time_consistent;
  }
};

/// Success probabilities below this floor are rejected as degenerate.
inline constexpr double kMinSuccessProbability = 1e-300;

/// Erlang(N, lambda) density of the N-th arrival instant.
[[nodiscard]] double erlang_pdf(double t, const AuctionParams& params);

/// P(S_N < T) through the incomplete-gamma kernel; exactly 1 when T is infinite.
[[nodiscard]] double success_probability(const AuctionParams& params);

/// Same quantity as success_probability, evaluated as one minus the Poisson
/// lower tail summed term by term in log space. Kept as an independent
/// route for cross-checking; success_probability is the canonical value.
[[nodiscard]] double success_probability_poisson_tail(const AuctionParams& params);

/// E[min(S_N, T)] = (1/lambda) * sum_{n<N} P(n+1, lambda T).
/// Throws DomainError for an infinite horizon.
[[nodiscard]] double truncated_mean_duration(const AuctionParams& params);

/// E[S_N | S_N < T] = (N/lambda) P(N+1, lambda T) / P(N, lambda T).
/// Throws DomainError for an infinite horizon or p below the floor.
[[nodiscard]] double conditional_success_duration(const AuctionParams& params);

/// (1 - p) / p. Throws DomainError when p < kMinSuccessProbability.
[[nodiscard]] double expected_failures(double p_success);

[[nodiscard]] double dispatch_time(const AuctionParams& params, TdMode mode);

/// Everything above in one pass. With an infinite horizon both durations
/// and both dispatch times are N / lambda and failures are zero.
[[nodiscard]] AuctionStatistics compute_statistics(const AuctionParams& params);

}  // namespace gbinv
