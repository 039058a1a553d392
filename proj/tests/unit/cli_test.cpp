#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "run_config.hpp"

namespace gbinv::cli {
namespace {

const std::string kConfigDir = GBINV_CONFIG_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gbinv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

KeyValues base_values() { return read_config_file(kConfigDir + "/base_case.cfg"); }

TEST(ParseKeyValues, CommentsQuotesAndSeparators) {
  const auto values = parse_key_values(
      "# heading\n\n n_required = 100  # trailing\nmax_time: 7\nformat = \"csv\"\npath = 'out file.csv'\n");
  EXPECT_EQ(values.at("n_required"), "100");
  EXPECT_EQ(values.at("max_time"), "7");
  EXPECT_EQ(values.at("format"), "csv");
  EXPECT_EQ(values.at("path"), "out file.csv");
}

TEST(ParseKeyValues, RejectsUnknownAndDuplicateKeys) {
  EXPECT_THROW((void)parse_key_values("bidders = 3\n"), ConfigError);
  EXPECT_THROW((void)parse_key_values("seed = 1\nseed = 2\n"), ConfigError);
  EXPECT_THROW((void)parse_key_values("seed\n"), ConfigError);
}

TEST(KnownKeys, EveryKeyHasADottedPath) {
  for (const auto& spec : known_keys()) {
    EXPECT_NE(spec.field_path.find('.'), std::string_view::npos) << spec.key;
  }
}

TEST(BuildRunConfig, BaseCase) {
  const RunConfig config = build_run_config(base_values(), Command::simulate);
  EXPECT_EQ(config.auction.n_required, 100);
  EXPECT_EQ(config.auction.max_time, 7.0);
  EXPECT_EQ(config.costs.reorder_cost, 300.0);
  EXPECT_EQ(config.quantity, 500.0);
  EXPECT_EQ(config.num_cycles, 100000u);
  EXPECT_EQ(config.seed, 42u);
}

TEST(BuildRunConfig, ErrorsNameTheField) {
  const auto field_of = [](KeyValues values, Command command) -> std::string {
    try {
      (void)build_run_config(values, command);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "<no error>";
  };
  auto values = base_values();
  values["holding_rate"] = "0";
  EXPECT_EQ(field_of(values, Command::optimize), "costs.holding_rate");
  values = base_values();
  values["reorder_cost"] = "-1";
  EXPECT_EQ(field_of(values, Command::optimize), "costs.reorder_cost");
  values = base_values();
  values.erase("penalty_cost");
  EXPECT_EQ(field_of(values, Command::validate), "costs.penalty_cost");
  values = base_values();
  values["num_cycles"] = "0";
  EXPECT_EQ(field_of(values, Command::simulate), "simulation.num_cycles");
  values = base_values();
  values["n_required"] = "12.5";
  EXPECT_EQ(field_of(values, Command::optimize), "auction.n_required");
  values = base_values();
  values["td_mode"] = "exact";
  EXPECT_EQ(field_of(values, Command::optimize), "modes.td_mode");
  values = base_values();
  values.erase("quantity");
  EXPECT_EQ(field_of(values, Command::simulate), "policy.quantity");
  values = base_values();
  values["max_time"] = "inf";
  EXPECT_EQ(field_of(values, Command::simulate), "auction.max_time");
  EXPECT_EQ(field_of(values, Command::optimize), "<no error>");
}

TEST(RunCli, OptimizeBaseCase) {
  const auto r = run({"optimize", kConfigDir + "/base_case.cfg"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* expected : {"0.4333", "6.7829", "15.9376", "433.8597", "434"}) {
    EXPECT_NE(r.out.find(expected), std::string::npos) << expected;
  }
}

TEST(RunCli, OptimizeInfiniteHorizonReportsEoq) {
  const auto r = run({"optimize", kConfigDir + "/eoq_limit.cfg"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("EOQ"), std::string::npos);
  EXPECT_NE(r.out.find("648.0741"), std::string::npos);
}

TEST(RunCli, ConfigErrorsExitTwo) {
  auto r = run({"optimize", kConfigDir + "/base_case.cfg", "--holding_rate", "0"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("holding_rate"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = run({"simulate", kConfigDir + "/base_case.cfg", "--cycles", "0"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("num_cycles"), std::string::npos);

  r = run({"validate", "--n_required", "100", "--max_time", "7", "--arrival_rate", "14"});
  EXPECT_EQ(r.code, kExitConfigError);

  r = run({"sweep", kConfigDir + "/table2_sweep.cfg", "--format", "xlsx"});
  EXPECT_EQ(r.code, kExitConfigError);

  r = run({"optimize", kConfigDir + "/missing.cfg"});
  EXPECT_EQ(r.code, kExitConfigError);

  r = run({"optimize", "--no-such-flag"});
  EXPECT_EQ(r.code, kExitConfigError);
}

TEST(RunCli, NumericFailureExitsThree) {
  const auto r = run({"optimize", kConfigDir + "/base_case.cfg", "--n_required", "5000", "--max_time", "1",
                      "--arrival_rate", "1"});
  EXPECT_EQ(r.code, kExitNumericError);
  EXPECT_FALSE(r.err.empty());
}

TEST(RunCli, SweepFormatsAndPartialGrid) {
  auto r = run({"sweep", kConfigDir + "/table2_sweep.cfg", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);

  r = run({"sweep", kConfigDir + "/table2_sweep.cfg"});
  EXPECT_NE(r.out.find("| 100 | 156 | 434 | 606 |"), std::string::npos);

  r = run({"sweep", kConfigDir + "/table2_sweep.cfg", "--n_values", "100, 5000", "--t_values", "1", "--format",
           "json"});
  EXPECT_EQ(r.code, kExitPartialGrid);
  EXPECT_NE(r.err.find("N=5000"), std::string::npos);
  EXPECT_NE(r.out.find("null"), std::string::npos);
}

TEST(RunCli, SweepWritesToPath) {
  const auto path = std::filesystem::temp_directory_path() / "gbinv_cli_test_sweep.csv";
  std::filesystem::remove(path);
  const auto r = run({"sweep", kConfigDir + "/table2_sweep.cfg", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("n,t,lambda", 0), 0u);
  std::filesystem::remove(path);
}

TEST(RunCli, SimulateIsReproducible) {
  const std::vector<std::string> args{"simulate", kConfigDir + "/base_case.cfg", "--cycles", "5000"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("consistent"), std::string::npos);
  const auto other = run({"simulate", kConfigDir + "/base_case.cfg", "--cycles", "5000", "--seed", "43"});
  EXPECT_NE(a.out, other.out);
}

TEST(RunCli, SimulateWritesEventLog) {
  const auto path = std::filesystem::temp_directory_path() / "gbinv_cli_test_events.jsonl";
  std::filesystem::remove(path);
  const auto r = run({"simulate", kConfigDir + "/base_case.cfg", "--cycles", "20", "--event_log", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) ++count;
  EXPECT_GE(count, 100u);
  std::filesystem::remove(path);
}

TEST(RunCli, ValidatePassesAcrossSeeds) {
  for (const char* seed : {"1", "2", "3", "4", "5"}) {
    const auto r = run({"validate", kConfigDir + "/base_case.cfg", "--seed", seed, "--cycles", "20000"});
    EXPECT_EQ(r.code, kExitOk) << "seed " << seed << "\n" << r.out;
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
    EXPECT_NE(r.out.find("[PASS]"), std::string::npos);
  }
}

TEST(RunCli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace gbinv::cli
