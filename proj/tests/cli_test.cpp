// Copyright 2026 The VLN-CM Simulator Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "vlncm/cli/commands.hpp"

namespace vlncm::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::initializer_list<std::string> args) {
  std::vector<std::string> words = {"vlncm"};
  words.insert(words.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& w : words) argv.push_back(w.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const fs::path& p) {
  std::ifstream in(p);
  int n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("vlncm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  std::string path(const std::string& rel) const { return (root_ / rel).string(); }

  void generate_small() {
    ASSERT_EQ(cli({"generate", "--seed", "7", "--worlds", "2", "--episodes-per-world", "3",
                   "--out", path("data")})
                  .code,
              kExitOk);
  }

  fs::path root_;
};

TEST_F(CliTest, GenerateWritesWorldsAndIsDeterministic) {
  generate_small();
  EXPECT_TRUE(fs::exists(root_ / "data/worlds/world_000.json"));
  EXPECT_TRUE(fs::exists(root_ / "data/worlds/world_001.json"));
  EXPECT_TRUE(fs::exists(root_ / "data/manifest.json"));
  const std::string first = slurp(root_ / "data/episodes.json");
  ASSERT_EQ(cli({"generate", "--seed", "7", "--worlds", "2", "--episodes-per-world", "3",
                 "--out", path("again")})
                .code,
            kExitOk);
  EXPECT_EQ(first, slurp(root_ / "again/episodes.json"));
  EXPECT_EQ(slurp(root_ / "data/worlds/world_001.json"),
            slurp(root_ / "again/worlds/world_001.json"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"generate", "--worlds", "0", "--out", path("d")}).code, kExitUsage);
  EXPECT_EQ(cli({"generate", "--rooms", "9", "--out", path("d")}).code, kExitUsage);
  EXPECT_EQ(cli({"eval", "--scorer", "clip"}).code, kExitUsage);
  EXPECT_EQ(cli({"eval", "--only", "everything"}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"eval", "--data", path("nowhere"), "--out", path("r")}).code, kExitUsage);
  EXPECT_FALSE(fs::exists(root_ / "d"));
}

TEST_F(CliTest, HelpExitsCleanly) {
  const CliRun r = cli({"eval", "--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("--parallelism"), std::string::npos);
}

TEST_F(CliTest, EvalWritesReport) {
  generate_small();
  const CliRun r = cli({"eval", "--data", path("data"), "--out", path("results"), "--with-baselines",
                     "--parallelism", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_lines(root_ / "results/results.csv"), 7);
  EXPECT_EQ(count_lines(root_ / "results/episodes.jsonl"), 36);
  EXPECT_TRUE(fs::exists(root_ / "results/trajectories.jsonl"));
  EXPECT_TRUE(fs::exists(root_ / "results/manifest.json"));
  const std::string report = slurp(root_ / "results/report.txt");
  EXPECT_NE(report.find("Random Agent"), std::string::npos);
  EXPECT_NE(report.find("VLN-CM"), std::string::npos);
}

TEST_F(CliTest, EvalOnlySelectsConfigs) {
  generate_small();
  ASSERT_EQ(cli({"eval", "--data", path("data"), "--out", path("r"), "--only", "full", "--only",
                 "no-omp"})
                .code,
            kExitOk);
  const std::string csv = slurp(root_ / "r/results.csv");
  EXPECT_EQ(count_lines(root_ / "r/results.csv"), 3);
  EXPECT_NE(csv.find("\nfull,"), std::string::npos);
  EXPECT_NE(csv.find("\nno-omp,"), std::string::npos);
}

TEST_F(CliTest, ConfigFileSuppliesDefaults) {
  generate_small();
  std::ofstream(root_ / "eval.ini") << "[eval]\nonly=full\nbudget=5\nout=" << path("from_file") << "\n";
  ASSERT_EQ(cli({"eval", "--config", path("eval.ini"), "--data", path("data")}).code, kExitOk);
  EXPECT_EQ(count_lines(root_ / "from_file/results.csv"), 2);
  std::ifstream eps(root_ / "from_file/episodes.jsonl");
  for (std::string line; std::getline(eps, line);) {
    const auto at = line.find("\"steps\":");
    ASSERT_NE(at, std::string::npos);
    EXPECT_LE(std::stoi(line.substr(at + 8)), 5);
  }
  ASSERT_EQ(cli({"eval", "--config", path("eval.ini"), "--data", path("data"), "--out",
                 path("flag")})
                .code,
            kExitOk);
  EXPECT_TRUE(fs::exists(root_ / "flag/results.csv"));
}

TEST_F(CliTest, RemoteParserNeedsCredentials) {
  generate_small();
  ::unsetenv("VLNCM_LLM_URL");
  ::unsetenv("VLNCM_LLM_TOKEN");
  const CliRun r = cli({"eval", "--data", path("data"), "--out", path("r"), "--parser", "remote"});
  EXPECT_EQ(r.code, kExitEnvironment);
  EXPECT_NE(r.err.find("VLNCM_LLM_URL"), std::string::npos);
  EXPECT_EQ(cli({"eval", "--data", path("data"), "--out", path("r"), "--scorer", "remote"}).code,
            kExitEnvironment);
}

TEST_F(CliTest, UnwritableOutputIsEnvironmentError) {
  std::ofstream(root_ / "blocker") << "x";
  EXPECT_EQ(cli({"generate", "--worlds", "1", "--out", path("blocker/sub")}).code, kExitEnvironment);
}

TEST_F(CliTest, OmpDatasetVerifies) {
  generate_small();
  const CliRun r = cli({"gen-omp-data", "--data", path("data"), "--out", path("omp"), "--samples", "20",
                     "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_lines(root_ / "omp/omp_dataset.jsonl"), 40);
}

}  // namespace
}  // namespace vlncm::cli
