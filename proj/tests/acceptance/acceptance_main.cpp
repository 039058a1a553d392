// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "gbinv/cost_model.hpp"
#include "gbinv/simulator.hpp"
#include "gbinv/stochastics.hpp"
#include "oracles.hpp"
#include "run_config.hpp"

namespace {

using namespace gbinv;

constexpr CostParams kCosts{40.0, 4.0, 0.02, 10.0, 300.0};
constexpr double kRate = 14.0;
constexpr std::array<long long, 3> kN{80, 100, 120};
constexpr std::array<double, 3> kT{6.0, 7.0, 8.0};

// Published grid values (rows N = 80, 100, 120; columns T = 6, 7, 8).
constexpr double kPublishedP[3][3] = {{0.6834, 0.9723, 0.9994}, {0.0484, 0.4333, 0.8826}, {0.0001, 0.0172, 0.2368}};
constexpr double kPublishedTd[3][3] = {
    {8.3539, 5.9060, 5.7192}, {123.94, 15.938, 8.1614}, {46989.0, 406.81, 33.681}};
constexpr long long kPublishedQ[3][3] = {{536, 637, 648}, {156, 434, 606}, {9, 94, 327}};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome base_case() {
  const auto stats = compute_statistics({100, 7.0, kRate});
  const double q_star = optimal_quantity(stats, kCosts, TdMode::paper);
  const long long best = best_integer_quantity(stats, kCosts, TdMode::paper);
  const bool ok = std::abs(stats.p_success - 0.4333) <= 5e-5 && std::abs(stats.e_min_duration - 6.7829) <= 1e-3 &&
                  std::abs(stats.dispatch_time_paper - 15.9376) <= 1e-3 && std::abs(q_star - 433.8597) <= 0.01 &&
                  best == 434;
  return {ok, fmt("p_T=%.6f T_d=%.6f Q*=%.6f", stats.p_success, stats.dispatch_time_paper, q_star) +
                  " E[T_a]=" + fmt("%.6f", stats.e_min_duration) + " best=" + std::to_string(best)};
}

template <typename Cell>
Outcome over_grid(Cell cell) {
  int failures = 0;
  std::string worst;
  double worst_score = -1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto [ok, score, detail] = cell(i, j);
      if (!ok) ++failures;
      if (score > worst_score) {
        worst_score = score;
        worst = "N=" + std::to_string(kN[i]) + " T=" + fmt("%g", kT[j]) + " " + detail;
      }
    }
  }
  return {failures == 0, std::to_string(9 - failures) + "/9 cells; largest deviation at " + worst};
}

struct CellResult {
  bool ok;
  double score;
  std::string detail;
};

AuctionStatistics grid_stats(std::size_t i, std::size_t j) { return compute_statistics({kN[i], kT[j], kRate}); }

Outcome grid_success_probability() {
  return over_grid([](std::size_t i, std::size_t j) {
    const double p = grid_stats(i, j).p_success;
    const double diff = std::abs(p - kPublishedP[i][j]);
    return CellResult{diff <= 5e-5, diff, fmt("p_T=%.8g vs %.4f", p, kPublishedP[i][j])};
  });
}

Outcome grid_dispatch_time() {
  return over_grid([](std::size_t i, std::size_t j) {
    const double td = grid_stats(i, j).dispatch_time_paper;
    const double rel = std::abs(td / kPublishedTd[i][j] - 1.0);
    const double tolerance = (kN[i] == 120 && kT[j] == 6.0) ? 0.05 : 0.01;
    return CellResult{rel <= tolerance, rel, fmt("T_d=%.8g vs %.8g (rel %.2e)", td, kPublishedTd[i][j], rel)};
  });
}

Outcome grid_quantity() {
  return over_grid([](std::size_t i, std::size_t j) {
    const double q = optimal_quantity(grid_stats(i, j), kCosts, TdMode::paper);
    const auto nearest = std::llround(q);
    const long long diff = std::abs(nearest - kPublishedQ[i][j]);
    const long long allowed = (kN[i] == 120 && kT[j] == 6.0) ? 1 : 0;
    return CellResult{diff <= allowed, static_cast<double>(diff),
                      "Q*=" + fmt("%.6f", q) + " vs " + std::to_string(kPublishedQ[i][j])};
  });
}

Outcome grid_cost_properties() {
  return over_grid([](std::size_t i, std::size_t j) {
    const auto stats = grid_stats(i, j);
    const double q_star = optimal_quantity(stats, kCosts, TdMode::paper);
    const double c_star = optimal_cost(stats, kCosts, TdMode::paper);
    const auto cost = [&](double q) {
      return long_run_average_cost(stats, kCosts, Policy{q}, TdMode::paper, AMode::approx);
    };
    const double rel = std::abs(c_star / cost(q_star) - 1.0);
    const long long best = best_integer_quantity(stats, kCosts, TdMode::paper);
    const double best_cost = cost(static_cast<double>(best));
    bool scan_ok = true;
    const long long lo = std::max(1LL, static_cast<long long>(std::floor(q_star)) - 50);
    const long long hi = static_cast<long long>(std::ceil(q_star)) + 50;
    for (long long q = lo; q <= hi; ++q) scan_ok = scan_ok && cost(static_cast<double>(q)) >= best_cost;
    return CellResult{rel <= 1e-9 && scan_ok, rel,
                      fmt("C*=%.10g rel=%.1e", c_star, rel) + (scan_ok ? " scan ok" : " scan found cheaper")};
  });
}

Outcome quadrature_oracle() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (long long n = 1; n <= 5; ++n) {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double rate : {0.5, 1.0, 3.0}) {
        const AuctionParams params{n, t, rate};
        worst = std::max(worst, std::abs(success_probability(params) -
                                         testing::quadrature_success_probability(n, t, rate)));
        worst = std::max(worst, std::abs(truncated_mean_duration(params) -
                                         testing::quadrature_truncated_mean(n, t, rate)));
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-8 && elapsed < 5.0, fmt("max |diff| %.2e over 45 cells in %.3f s", worst, elapsed)};
}

Outcome simulation_cross_check() {
  const auto start = std::chrono::steady_clock::now();
  const AuctionParams params{100, 7.0, kRate};
  const auto stats = compute_statistics(params);
  SimulationConfig config;
  config.num_cycles = 100000;
  config.seed = 42;
  const auto r = simulate(params, kCosts, Policy{500}, config);
  const double elapsed = seconds_since(start);

  const double z_p = (r.p_hat.value - 0.4333) / r.p_hat.std_error;
  const double z_td = (r.mean_dispatch_interval.value - stats.dispatch_time_consistent) /
                      r.mean_dispatch_interval.std_error;
  const double z_paper = (r.mean_dispatch_interval.value - 15.9376) / r.mean_dispatch_interval.std_error;
  const double analytic = long_run_average_cost(stats, kCosts, Policy{500}, TdMode::consistent, AMode::exact);
  const double z_cost = (r.long_run_cost.value - analytic) / r.long_run_cost.std_error;
  const bool ok = std::abs(z_p) <= 3 && std::abs(z_td) <= 3 && std::abs(z_paper) > 3 && std::abs(z_cost) <= 3 &&
                  elapsed < 60.0;
  return {ok, fmt("z(p)=%+.2f z(T_d consistent)=%+.2f z(T_d paper)=%+.2f", z_p, z_td, z_paper) +
                  fmt(" z(C exact)=%+.2f in %.2f s", z_cost, elapsed)};
}

Outcome eoq_limit_check() {
  const auto stats = compute_statistics({100, 1e5, kRate});
  const double q = optimal_quantity(stats, kCosts, TdMode::paper);
  const double eoq = std::sqrt(2.0 * 300.0 * 14.0 / 0.02);
  const double rel = std::abs(q / eoq - 1.0);
  return {rel <= 1e-3, fmt("Q*=%.6f EOQ=%.6f rel=%.2e", q, eoq, rel)};
}

Outcome derivative_properties() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> n_dist(1, 150);
  std::uniform_real_distribution<double> t_dist(0.5, 15.0);
  std::uniform_real_distribution<double> rate_dist(1.0, 30.0);
  std::uniform_real_distribution<double> cost_dist(0.0, 100.0);
  std::uniform_real_distribution<double> holding_dist(0.001, 1.0);
  std::uniform_real_distribution<double> reorder_dist(1.0, 1000.0);
  std::uniform_real_distribution<double> factor(0.2, 0.7);

  int draws = 0;
  int failures = 0;
  double worst_rel = 0.0;
  while (draws < 100) {
    const AuctionParams params{n_dist(rng), t_dist(rng), rate_dist(rng)};
    if (success_probability(params) < 1e-6) continue;
    ++draws;
    const auto stats = compute_statistics(params);
    CostParams costs{cost_dist(rng), cost_dist(rng) / 10.0, holding_dist(rng), cost_dist(rng), reorder_dist(rng)};
    const double q_star = optimal_quantity(stats, costs, TdMode::paper);
    const double q = (rng() % 2 == 0) ? q_star * factor(rng) : q_star / factor(rng);
    const auto cost = [&](double x) {
      return long_run_average_cost(stats, costs, Policy{x}, TdMode::paper, AMode::approx);
    };
    const auto d = cost_derivatives(stats, costs, Policy{q}, TdMode::paper);
    const double fd = testing::richardson_derivative(cost, q, 1e-3 * q);
    const double rel = std::abs(fd - d.first) / std::abs(d.first);
    worst_rel = std::max(worst_rel, rel);

    CostParams perturbed = costs;
    perturbed.dispatch_cost *= 3.7;
    perturbed.unit_transport_cost += 11.0;
    perturbed.failure_penalty = perturbed.failure_penalty * 0.1 + 250.0;
    const bool invariant = optimal_quantity(stats, perturbed, TdMode::paper) == q_star;
    if (rel > 1e-6 || d.second <= 0.0 || !invariant) ++failures;
  }
  return {failures == 0, std::to_string(draws - failures) + "/100 draws; worst C'(Q) relative error " +
                             fmt("%.2e", worst_rel)};
}

Outcome determinism() {
  const auto values = cli::read_config_file(std::string(GBINV_CONFIG_DIR) + "/base_case.cfg");
  auto config = cli::build_run_config(values, cli::Command::simulate);
  config.seed = 42;
  const auto first = cli::cmd_simulate(config);
  const auto second = cli::cmd_simulate(config);
  const bool identical = !first.report.empty() && first.report == second.report;

  const AuctionParams params{100, 7.0, kRate};
  SimulationConfig sim;
  sim.num_cycles = 2000;
  sim.seed = 42;
  const auto batch = replicate(params, kCosts, Policy{500}, sim, 8);
  bool ordered = batch.size() == 8;
  for (std::uint64_t r = 8; ordered && r-- > 0;) {
    SimulationConfig one = sim;
    one.stream = r;
    ordered = simulate(params, kCosts, Policy{500}, one) == batch[r];
  }
  return {identical && ordered, std::string(identical ? "reports identical" : "reports differ") + ", " +
                                    (ordered ? "8 streams order-independent" : "stream mismatch")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 base case", base_case},
      {"AC2 grid success probability", grid_success_probability},
      {"AC3 grid dispatch time", grid_dispatch_time},
      {"AC4 grid optimal quantity", grid_quantity},
      {"AC5 optimal cost properties", grid_cost_properties},
      {"AC6 quadrature oracle", quadrature_oracle},
      {"AC7 simulation cross-check", simulation_cross_check},
      {"AC8 EOQ limit", eoq_limit_check},
      {"AC9 derivative and convexity", derivative_properties},
      {"AC10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
