#include "gbinv/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include <json.hpp>

#include "gbinv/errors.hpp"
#include "parallel.hpp"

namespace gbinv {
namespace {

constexpr double kZ95 = 1.959963984540054;

// Welford running mean / variance.
class RunningStats {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] double mean() const noexcept { return mean_; }
  [[nodiscard]] double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  [[nodiscard]] Estimate estimate() const noexcept {
    return {mean_, count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0};
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Running means, variances and covariance of (cost, length) pairs.
class PairStats {
 public:
  void add(double cost, double length) noexcept {
    ++count_;
    const auto n = static_cast<double>(count_);
    const double dc = cost - mean_cost_;
    const double dl = length - mean_length_;
    mean_cost_ += dc / n;
    mean_length_ += dl / n;
    m2_cost_ += dc * (cost - mean_cost_);
    m2_length_ += dl * (length - mean_length_);
    co_moment_ += dc * (length - mean_length_);
  }

  // Delta-method standard error of mean_cost / mean_length.
  [[nodiscard]] double ratio_std_error(double ratio) const noexcept {
    if (count_ < 2 || mean_length_ <= 0.0) return 0.0;
    const double denom = static_cast<double>(count_ - 1);
    const double var = (m2_cost_ - 2.0 * ratio * co_moment_ + ratio * ratio * m2_length_) / denom;
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(count_)) / mean_length_;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_cost_ = 0.0;
  double mean_length_ = 0.0;
  double m2_cost_ = 0.0;
  double m2_length_ = 0.0;
  double co_moment_ = 0.0;
};

class ArrivalSampler {
 public:
  ArrivalSampler(const AuctionParams& auction, DrawMethod method)
      : n_(auction.n_required),
        horizon_(auction.max_time),
        method_(method),
        erlang_(static_cast<double>(auction.n_required), 1.0 / auction.arrival_rate),
        exponential_(auction.arrival_rate) {}

  // Instant of the N-th arrival. The interarrival path stops summing once
  // the horizon is passed; the outcome is a failure either way.
  double operator()(std::mt19937_64& engine) {
    if (method_ == DrawMethod::erlang) return erlang_(engine);
    double t = 0.0;
    for (long long i = 0; i < n_ && t < horizon_; ++i) t += exponential_(engine);
    return t;
  }

 private:
  long long n_;
  double horizon_;
  DrawMethod method_;
  std::gamma_distribution<double> erlang_;
  std::exponential_distribution<double> exponential_;
};

void check_simulation_inputs(const AuctionParams& auction, const CostParams& costs, Policy policy,
                             const SimulationConfig& config) {
  validate(auction);
  validate(costs);
  if (auction.unbounded()) {
    throw DomainError("simulate requires a finite max_time; use a large finite horizon instead");
  }
  if (config.num_cycles < 1) throw ParameterError("num_cycles must be >= 1");
  if (!(policy.quantity > 0.0) || !std::isfinite(policy.quantity)) {
    throw ParameterError("replenishment quantity must be positive and finite");
  }
  if (config.shortfall_rule == ShortfallRule::carry_shortfall &&
      policy.quantity < static_cast<double>(auction.n_required)) {
    throw ParameterError("carry_shortfall requires quantity >= n_required");
  }
}

}  // namespace

std::string_view to_string(ShortfallRule rule) {
  return rule == ShortfallRule::reset_to_q ? "reset_to_q" : "carry_shortfall";
}

ShortfallRule parse_shortfall_rule(std::string_view text) {
  if (text == "reset_to_q") return ShortfallRule::reset_to_q;
  if (text == "carry_shortfall") return ShortfallRule::carry_shortfall;
  throw ParameterError("shortfall_rule must be 'reset_to_q' or 'carry_shortfall', got '" + std::string(text) + "'");
}

std::string_view to_string(DrawMethod method) {
  return method == DrawMethod::erlang ? "erlang" : "interarrival_sum";
}

DrawMethod parse_draw_method(std::string_view text) {
  if (text == "erlang") return DrawMethod::erlang;
  if (text == "interarrival_sum") return DrawMethod::interarrival_sum;
  throw ParameterError("draw_method must be 'erlang' or 'interarrival_sum', got '" + std::string(text) + "'");
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SimulationResult simulate(const AuctionParams& auction, const CostParams& costs, Policy policy,
                          const SimulationConfig& config) {
  check_simulation_inputs(auction, costs, policy, config);

  std::mt19937_64 engine(derive_stream_seed(config.seed, config.stream));
  ArrivalSampler sample_arrival(auction, config.draw_method);

  const double q = policy.quantity;
  const auto batch = static_cast<double>(auction.n_required);
  const double horizon = auction.max_time;
  const double dispatch_charge = costs.dispatch_cost + costs.unit_transport_cost * batch;

  SimulationResult result;
  SimulationCounts& counts = result.counts;
  SimulatedCosts& totals = result.cost_totals;
  RunningStats dispatch_intervals;
  RunningStats cycle_lengths;
  RunningStats cycle_costs;
  PairStats cycle_pairs;

  double clock = 0.0;
  double last_dispatch = 0.0;
  double level = q;

  for (std::uint64_t cycle = 0; cycle < config.num_cycles; ++cycle) {
    const double cycle_start = clock;
    double cycle_cost = 0.0;
    bool cycle_open = true;
    while (cycle_open) {
      const double round_start = clock;
      const double arrival = sample_arrival(engine);
      const bool success = arrival < horizon;
      const double duration = success ? arrival : horizon;

      const double holding = costs.holding_rate * level * duration;
      totals.holding += holding;
      cycle_cost += holding;
      clock += duration;
      ++counts.auctions;

      if (success) {
        ++counts.successes;
        ++counts.dispatches;
        totals.dispatching += costs.dispatch_cost;
        totals.transport += costs.unit_transport_cost * batch;
        cycle_cost += dispatch_charge;
        dispatch_intervals.add(clock - last_dispatch);
        last_dispatch = clock;
        level -= batch;
      } else {
        ++counts.failures;
        totals.penalty += costs.failure_penalty;
        cycle_cost += costs.failure_penalty;
      }

      if (config.event_log != nullptr) {
        nlohmann::ordered_json record;
        record["cycle"] = cycle;
        record["start"] = round_start;
        record["duration"] = duration;
        record["outcome"] = success ? "success" : "failure";
        record["level_after"] = level;
        *config.event_log << record.dump() << '\n';
      }

      if (success && level <= 0.0) {
        totals.reorder += costs.reorder_cost;
        cycle_cost += costs.reorder_cost;
        const double shortfall = -level;
        level = config.shortfall_rule == ShortfallRule::reset_to_q ? q : q - shortfall;
        cycle_open = false;
      }
    }
    ++counts.cycles;
    const double length = clock - cycle_start;
    result.total_cost += cycle_cost;
    cycle_lengths.add(length);
    cycle_costs.add(cycle_cost);
    cycle_pairs.add(cycle_cost, length);
  }

  result.total_time = clock;
  const auto auctions = static_cast<double>(counts.auctions);
  const double p_hat = static_cast<double>(counts.successes) / auctions;
  result.p_hat = {p_hat, std::sqrt(p_hat * (1.0 - p_hat) / auctions)};
  result.mean_dispatch_interval = dispatch_intervals.estimate();
  result.mean_cycle_length = cycle_lengths.estimate();
  result.mean_cycle_cost = cycle_costs.estimate();
  result.long_run_cost.value = result.total_time > 0.0 ? result.total_cost / result.total_time : 0.0;
  result.long_run_cost.std_error = cycle_pairs.ratio_std_error(result.long_run_cost.value);
  result.long_run_cost.half_width = kZ95 * result.long_run_cost.std_error;
  return result;
}

std::vector<SimulationResult> replicate(const AuctionParams& auction, const CostParams& costs, Policy policy,
                                        const SimulationConfig& config, std::uint64_t num_replications) {
  if (num_replications < 1) throw ParameterError("num_replications must be >= 1");
  check_simulation_inputs(auction, costs, policy, config);
  std::vector<SimulationResult> results(num_replications);
  detail::parallel_for(num_replications, [&](std::size_t r) {
    SimulationConfig stream_config = config;
    stream_config.stream = r;
    stream_config.event_log = nullptr;
    results[r] = simulate(auction, costs, policy, stream_config);
  });
  return results;
}

AnalyticComparison compare_to_analytic(const SimulationResult& result, const AuctionStatistics& stats,
                                       const CostParams& costs, Policy policy, TdMode td_mode, AMode a_mode) {
  const auto in_se = [](double simulated, double analytic, double se) {
    if (se > 0.0) return (simulated - analytic) / se;
    if (simulated == analytic) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), simulated - analytic);
  };
  AnalyticComparison out;
  out.td_mode = td_mode;
  out.a_mode = a_mode;
  out.analytic_p = stats.p_success;
  out.analytic_dispatch_time = stats.dispatch_time(td_mode);
  out.analytic_cost = long_run_average_cost(stats, costs, policy, td_mode, a_mode);
  out.p_delta_se = in_se(result.p_hat.value, out.analytic_p, result.p_hat.std_error);
  out.dispatch_delta_se =
      in_se(result.mean_dispatch_interval.value, out.analytic_dispatch_time, result.mean_dispatch_interval.std_error);
  out.cost_delta_se = in_se(result.long_run_cost.value, out.analytic_cost, result.long_run_cost.std_error);
  return out;
}

}  // namespace gbinv
