// Copyright 2026 The FairNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the installed command-line binary end to end.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fairnoise/csv_io.h"
#include "fairnoise/sweep.h"
#include "fairnoise/synthetic.h"
#include "test_util.h"

namespace fairnoise {
namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult RunCli(const std::string& args, const std::string& env = "") {
  const std::string out = testing::TempPath("cli_stdout.txt");
  const std::string command = env + " " + FAIRNOISE_CLI_PATH + " " + args +
                              " > " + out + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = Slurp(out);
  std::remove(out.c_str());
  return result;
}

std::string WriteDataset(const Dataset& data, const std::string& name) {
  const std::string path = testing::TempPath(name);
  write_csv(path, data, DefaultFeatureNames(data.dimension()));
  return path;
}

// Exactly half of the examples in each group, with a label signal.
Dataset BalancedData(long n) {
  SyntheticConfig config = SyntheticConfig::HighDisparity();
  config.n = n;
  Dataset data = synth_generate(config);
  BitVector a(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i % 2;
  return data.WithSensitive(a);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").code, 1);
  EXPECT_EQ(RunCli("frobnicate").code, 1);
  EXPECT_EQ(RunCli("dp-calibrate --rho 0.1 --bogus 3").code, 1);
  EXPECT_EQ(RunCli("dp-calibrate").code, 1);
  EXPECT_EQ(RunCli("dp-calibrate --rho 0.1 --epsilon 2").code, 1);
  EXPECT_EQ(RunCli("dp-calibrate --rho abc").code, 1);
  EXPECT_EQ(RunCli("--help").code, 0);
}

TEST(CliTest, DpCalibrate) {
  const RunResult from_eps = RunCli("dp-calibrate --epsilon 1.73");
  EXPECT_EQ(from_eps.code, 0);
  EXPECT_NE(from_eps.out.find("rho = 0.1506"), std::string::npos) << from_eps.out;
  const RunResult from_rho = RunCli("dp-calibrate --rho 0.15");
  EXPECT_EQ(from_rho.code, 0);
  EXPECT_NE(from_rho.out.find("epsilon = 1.7346"), std::string::npos);
  EXPECT_NE(from_rho.out.find("base rate 0.5000: 0.7000"), std::string::npos)
      << from_rho.out;
  EXPECT_EQ(RunCli("dp-calibrate --rho 0.6").code, 1);
  EXPECT_EQ(RunCli("dp-calibrate --epsilon -1").code, 1);
}

TEST(CliTest, CorruptWithoutNoiseCopiesInput) {
  Rng rng(5);
  const std::string in = WriteDataset(testing::RandomDataset(rng, 300, 2),
                                      "cli_in.csv");
  const std::string out = testing::TempPath("cli_out.csv");
  EXPECT_EQ(RunCli("corrupt --input " + in + " --output " + out +
                " --rho-plus 0 --rho-minus 0 --seed 3")
                .code,
            0);
  EXPECT_EQ(Slurp(out), Slurp(in));
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST(CliTest, CorruptReportsFlipFraction) {
  const std::string in = WriteDataset(BalancedData(100000), "cli_big.csv");
  const std::string out = testing::TempPath("cli_big_out.csv");
  const std::string args = "corrupt --input " + in + " --output " + out +
                           " --rho-plus 0 --rho-minus 0.2 --seed 17";
  const RunResult result = RunCli(args);
  ASSERT_EQ(result.code, 0);
  const auto pos = result.out.find("flipped A=0 -> 1:");
  ASSERT_NE(pos, std::string::npos) << result.out;
  const auto open = result.out.find('(', pos);
  const double fraction = std::stod(result.out.substr(open + 1));
  EXPECT_NEAR(fraction, 0.2, 0.012);
  const std::string first = Slurp(out);
  ASSERT_EQ(RunCli(args).code, 0);
  EXPECT_EQ(Slurp(out), first);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST(CliTest, DataErrors) {
  const std::string bad = testing::TempPath("cli_bad.csv");
  std::ofstream(bad) << "x,label\n1,0\n";
  const std::string out = testing::TempPath("cli_unused.csv");
  EXPECT_EQ(RunCli("corrupt --input " + bad + " --output " + out).code, 2);
  EXPECT_EQ(RunCli("corrupt --input " + testing::TempPath("missing.csv") +
                " --output " + out)
                .code,
            2);
  std::remove(bad.c_str());
}

TEST(CliTest, TrainReportsScaledToleranceAndMetricsRun) {
  const std::string data = WriteDataset(BalancedData(2000), "cli_train.csv");
  const std::string model = testing::TempPath("cli.model");
  const std::string trace = testing::TempPath("cli_trace.json");
  const RunResult trained =
      RunCli("train --input " + data + " --model " + model + " --trace " + trace +
          " --tau 0.2 --rho-plus 0.15 --rho-minus 0.15");
  ASSERT_EQ(trained.code, 0);
  EXPECT_NE(trained.out.find("tau' = 0.1400"), std::string::npos) << trained.out;
  const auto parsed = nlohmann::json::parse(Slurp(trace));
  EXPECT_NEAR(parsed["tolerance"].get<double>(), 0.14, 1e-12);

  EXPECT_EQ(RunCli("train --input " + data + " --model " + model +
                " --tau 0.2 --rho-plus 0.15")
                .code,
            1);
  EXPECT_EQ(RunCli("train --input " + data + " --model " + model +
                " --tau 0.2 --estimate-noise --rho-plus 0.1")
                .code,
            1);

  const std::string report = testing::TempPath("cli_metrics.json");
  const RunResult metrics =
      RunCli("metrics --model " + model + " --input " + data + " --output " + report);
  ASSERT_EQ(metrics.code, 0);
  const auto values = nlohmann::json::parse(Slurp(report));
  for (const char* key : {"ddp", "deo", "error"}) {
    ASSERT_TRUE(values.contains(key));
    EXPECT_GE(values[key].get<double>(), 0.0);
    EXPECT_LE(values[key].get<double>(), 1.0);
  }

  Rng rng(1);
  const std::string wide = WriteDataset(testing::RandomDataset(rng, 50, 5),
                                        "cli_wide.csv");
  EXPECT_EQ(RunCli("metrics --model " + model + " --input " + wide).code, 2);
  for (const auto& p : {data, model, trace, report, wide}) std::remove(p.c_str());
}

TEST(CliTest, EstimateOnCleanData) {
  AnchorConfig anchor;
  anchor.n = 20000;
  const std::string data = WriteDataset(anchor_generate(anchor), "cli_anchor.csv");
  const std::string report = testing::TempPath("cli_estimate.json");
  ASSERT_EQ(RunCli("estimate --input " + data + " --output " + report).code, 0);
  const auto values = nlohmann::json::parse(Slurp(report));
  EXPECT_LE(values["rates"]["rho_plus"].get<double>(), 0.03);
  EXPECT_LE(values["rates"]["rho_minus"].get<double>(), 0.03);
  ASSERT_EQ(RunCli("estimate --criterion eo --input " + data + " --output " +
                report)
                .code,
            0);
  EXPECT_EQ(nlohmann::json::parse(Slurp(report))["criterion"], "eo");
  EXPECT_EQ(RunCli("estimate --criterion xx --input " + data).code, 1);
  std::remove(data.c_str());
  std::remove(report.c_str());
}

TEST(CliTest, SweepWithDefaultConfig) {
  const std::string out = testing::TempPath("cli_sweep.csv");
  const RunResult result =
      RunCli("sweep --config " FAIRNOISE_CONFIG_DIR "/default_sweep.conf --output " +
              out,
          "FAIRNOISE_JOBS=2");
  ASSERT_EQ(result.code, 0) << result.out;
  std::istringstream table(Slurp(out));
  std::string header;
  std::getline(table, header);
  EXPECT_EQ(header, kResultsHeader);
  table.seekg(0);
  EXPECT_EQ(read_results(table).size(), 120u);
  EXPECT_FALSE(Slurp(SummaryPath(out)).empty());

  EXPECT_EQ(RunCli("sweep --output " + out + " --set nonsense=1").code, 1);
  EXPECT_EQ(RunCli("sweep --output " + out + " --set repetitions").code, 1);
  std::remove(out.c_str());
  std::remove(SummaryPath(out).c_str());
}

}  // namespace
}  // namespace fairnoise
