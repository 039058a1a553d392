#include "gbinv/stochastics.hpp"

#include <cmath>
#include <string>

#include "gbinv/errors.hpp"
#include "gbinv/special_functions.hpp"

namespace gbinv {

std::string_view to_string(TdMode mode) { return mode == TdMode::paper ? "paper" : "consistent"; }

TdMode parse_td_mode(std::string_view text) {
  if (text == "paper") return TdMode::paper;
  if (text == "consistent") return TdMode::consistent;
  throw ParameterError("td_mode must be 'paper' or 'consistent', got '" + std::string(text) + "'");
}

void validate(const AuctionParams& params) {
  if (params.n_required < 1) {
    throw DomainError("n_required must be >= 1, got " + std::to_string(params.n_required));
  }
  if (!(params.max_time > 0.0)) throw DomainError("max_time must be > 0");
  if (!(params.arrival_rate > 0.0) || !std::isfinite(params.arrival_rate)) {
    throw DomainError("arrival_rate must be positive and finite");
  }
}

double erlang_pdf(double t, const AuctionParams& params) {
  validate(params);
  if (!(t >= 0.0)) throw DomainError("erlang_pdf: t must be nonnegative");
  const double lambda = params.arrival_rate;
  if (params.n_required == 1) return lambda * std::exp(-lambda * t);
  if (t == 0.0) return 0.0;
  // lambda * Poisson(N-1; lambda t)
  return lambda * std::exp(log_poisson_pmf(params.n_required - 1, lambda * t));
}

double success_probability(const AuctionParams& params) {
  validate(params);
  if (params.unbounded()) return 1.0;
  return regularized_lower_gamma(static_cast<double>(params.n_required), params.arrival_rate * params.max_time);
}

double success_probability_poisson_tail(const AuctionParams& params) {
  validate(params);
  if (params.unbounded()) return 1.0;
  const double mean = params.arrival_rate * params.max_time;
  double tail = 0.0;
  for (long long n = 0; n < params.n_required; ++n) tail += std::exp(log_poisson_pmf(n, mean));
  return 1.0 - tail;
}

double truncated_mean_duration(const AuctionParams& params) {
  validate(params);
  if (params.unbounded()) {
    throw DomainError("truncated_mean_duration requires a finite max_time; use dispatch_time for the limit");
  }
  const double x = params.arrival_rate * params.max_time;
  double sum = 0.0;
  for (long long n = 0; n < params.n_required; ++n) sum += regularized_lower_gamma(static_cast<double>(n + 1), x);
  return sum / params.arrival_rate;
}

double conditional_success_duration(const AuctionParams& params) {
  validate(params);
  if (params.unbounded()) {
    throw DomainError("conditional_success_duration requires a finite max_time");
  }
  const auto n = static_cast<double>(params.n_required);
  const double x = params.arrival_rate * params.max_time;
  const double p = regularized_lower_gamma(n, x);
  if (p < kMinSuccessProbability) {
    throw DomainError("success probability underflows (p < 1e-300); conditional duration undefined");
  }
  return n / params.arrival_rate * (regularized_lower_gamma(n + 1.0, x) / p);
}

double expected_failures(double p_success) {
  if (!(p_success >= kMinSuccessProbability) || p_success > 1.0) {
    throw DomainError("success probability " + std::to_string(p_success) +
                      " is outside [1e-300, 1]; expected failures would overflow");
  }
  return (1.0 - p_success) / p_success;
}

double dispatch_time(const AuctionParams& params, TdMode mode) {
  return compute_statistics(params).dispatch_time(mode);
}

AuctionStatistics compute_statistics(const AuctionParams& params) {
  validate(params);
  AuctionStatistics stats;
  stats.params = params;
  if (params.unbounded()) {
    const double mean = static_cast<double>(params.n_required) / params.arrival_rate;
    stats.p_success = 1.0;
    stats.e_min_duration = mean;
    stats.e_cond_duration = mean;
    stats.expected_failures = 0.0;
    stats.dispatch_time_paper = mean;
    stats.dispatch_time_consistent = mean;
    return stats;
  }
  stats.p_success = success_probability(params);
  stats.expected_failures = expected_failures(stats.p_success);
  stats.e_min_duration = truncated_mean_duration(params);
  stats.e_cond_duration = conditional_success_duration(params);
  const double wasted = stats.expected_failures * params.max_time;
  stats.dispatch_time_paper = wasted + stats.e_min_duration;
  stats.dispatch_time_consistent = stats.e_cond_duration + wasted;
  return stats;
}

}  // namespace gbinv
