// SPDX-License-Identifier: Apache-2.0
//
// rankone: tight semidefinite relaxations for multi-user transmit beamforming
// Copyright (C) 2026 The rankone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rankone/error.hpp"
#include "rankone/experiments.hpp"
#include "rankone/sdp.hpp"
#include "rankone/sdpa.hpp"
#include "rankone_cli/cli.hpp"
#include "rankone_cli/config.hpp"

using namespace rankone;
using namespace rankone::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rankone");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("rankone_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& text) {
    fs::create_directories(dir_);
    const fs::path p = dir_ / "run.cfg";
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

const char* kTrivial =
    "# single user on a basis channel\n"
    "scenario = perfect\n"
    "M = 2\n"
    "U = 1\n"
    "sinr_db = 10\n"
    "sigma2 = 0.001\n"
    "channels = basis\n";

}  // namespace

TEST(Config, ParsesKeysCommentsAndLists) {
  const auto cfg = parse_config("scenario = sproc  # robust\n\nM = 3, 4\nsinr_db=4,10\nrecord_timing = false\n");
  EXPECT_EQ(cfg.scenario, Scenario::Sproc);
  EXPECT_EQ(cfg.M, (std::vector<int>{3, 4}));
  EXPECT_EQ(cfg.sinr_db, (std::vector<double>{4.0, 10.0}));
  EXPECT_FALSE(cfg.record_timing);
  const auto sys = cfg.system();
  ASSERT_EQ(sys.gamma.size(), 2u);
  EXPECT_NEAR(sys.gamma[1], 10.0, 1e-12);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("colour = blue\n"), InvalidInput);
  EXPECT_THROW(parse_config("M 3\n"), InvalidInput);
  EXPECT_THROW(parse_config("M = three\n"), InvalidInput);
  EXPECT_THROW(parse_config("M = 3,\n"), InvalidInput);
  EXPECT_THROW(parse_config("trials = 0\n"), InvalidInput);
  EXPECT_THROW(parse_config("sinr_db = 1,2,3\nU = 2\n"), InvalidInput);
  EXPECT_THROW(parse_config("channels = basis\nM = 1\nU = 2\n"), InvalidInput);
}

TEST(Config, SolverOverrides) {
  const auto cfg = parse_config("gap_tol = 1e-7\nmax_iter = 50\n");
  EXPECT_EQ(cfg.solver().gap_tol, 1e-7);
  EXPECT_EQ(cfg.solver().max_iter, 50);
  EXPECT_EQ(cfg.sweep().solver.max_iter, 50);
}

TEST(Config, DefaultOutputDirFromEnvironment) {
  ::setenv("RANKONE_OUTPUT_DIR", "/tmp/somewhere", 1);
  EXPECT_EQ(default_output_dir(), "/tmp/somewhere");
  ::unsetenv("RANKONE_OUTPUT_DIR");
  EXPECT_EQ(default_output_dir(), "rankone_out");
}

TEST_F(CliTest, SolveTrivialInstance) {
  const auto r = run({"solve", "-c", write_config(kTrivial).string(), "-o", dir_.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("status: Optimal"), std::string::npos);
  EXPECT_NE(r.out.find("objective: 0.01"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "perfect_beamvectors.csv"));
}

TEST_F(CliTest, CertifyTrivialInstance) {
  const auto r = run({"certify", "-c", write_config(kTrivial).string(), "-o", dir_.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("certificate: PASS"), std::string::npos) << r.out;
}

TEST_F(CliTest, OverConstrainedSprocIsInfeasible) {
  const auto r = run({"solve", "-s", "scenario=sproc", "-s", "M=2", "-s", "U=2", "-s", "sinr_db=30", "-s", "radius=3",
                      "-s", "eps2=0.5", "-o", dir_.string()});
  EXPECT_EQ(r.code, kExitInfeasible) << r.out << r.err;
  EXPECT_NE(r.out.find("status: Infeasible"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-s", "colour=blue"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-s", "M"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-c", (dir_ / "missing.cfg").string()}).code, kExitUsage);
}

TEST_F(CliTest, SweepWritesOneRowPerTrial) {
  const auto r = run({"sweep", "-s", "scenario=perfect", "-s", "trials=2", "-s", "record_timing=false", "-s",
                      "threads=1", "-o", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto recs = parse_csv(slurp(dir_ / "perfect_trials.csv"));
  EXPECT_EQ(recs.size(), 22u);
  EXPECT_TRUE(std::all_of(recs.begin(), recs.end(), [](const TrialRecord& t) { return t.status == "Optimal"; }));
  EXPECT_TRUE(fs::exists(dir_ / "perfect_feasibility.svg"));
  EXPECT_NE(r.err.find("[11/11 points]"), std::string::npos) << r.err;
}

TEST_F(CliTest, ComplexityPrintsCounts) {
  const auto r = run({"complexity", "-s", "M=4", "-s", "U=2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("beta=10 c_form=10784 c_fact=8192"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExportSdpaRoundTrips) {
  const auto r = run({"export-sdpa", "-c", write_config(kTrivial).string(), "-o", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto res = sdp::solve(sdp::parse_sdpa(slurp(dir_ / "perfect.dat-s")));
  ASSERT_EQ(res.status, sdp::Status::Optimal);
  EXPECT_NEAR(res.primal_obj, 0.01, 1e-7);
}

TEST_F(CliTest, RisWritesTrace) {
  const auto r = run({"ris", "-s", "M=3", "-s", "N=4", "-s", "U=2", "-s", "sinr_db=5", "-o", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "ris_trace.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "ris_theta.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "ris_beamvectors.csv"));
}

TEST_F(CliTest, UnwritableOutputIsIoFailure) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "file") << "x";
  const auto r = run({"solve", "-c", write_config(kTrivial).string(), "-o", (dir_ / "file").string()});
  EXPECT_EQ(r.code, kExitFailure) << r.out << r.err;
}
