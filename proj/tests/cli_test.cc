// Copyright 2026 The tct-solver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the tct binary end to end and checks exit codes and output stability.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tct_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of `tct args`, stdout captured into `out` when given.
  int Run(const std::string& args, std::string* out = nullptr) {
    const std::string stdout_file = Path("stdout.txt");
    const std::string command =
        std::string(TCT_BINARY) + " " + args + " > " + stdout_file + " 2> " + Path("stderr.txt");
    const int status = std::system(command.c_str());
    if (out != nullptr) *out = Read(stdout_file);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void Write(const std::string& name, const std::string& text) {
    std::ofstream(Path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveGapInstance) {
  ASSERT_EQ(Run("gen gap --d 3 --k 2 --out " + Path("gap.json")), 0);
  std::string out;
  ASSERT_EQ(Run("solve --in " + Path("gap.json") + " --algo det --exact-lp", &out), 0);
  const auto json = nlohmann::json::parse(out);
  EXPECT_EQ(json["feasible"], true);
  EXPECT_EQ(json["lp_objective"], "9/4");
  EXPECT_EQ(json["algorithm"], "det");
}

TEST_F(CliTest, FixedSeedRerunsAreByteIdentical) {
  ASSERT_EQ(Run("--seed 5 gen random --d 4 --n 14 --out " + Path("r.json")), 0);
  std::string first;
  std::string second;
  const std::string args = "--seed 9 solve --in " + Path("r.json") + " --algo rand --trials 5";
  ASSERT_EQ(Run(args, &first), 0);
  ASSERT_EQ(Run(args, &second), 0);
  EXPECT_EQ(first, second);
  ASSERT_EQ(Run("--seed 5 gen random --d 4 --n 14 --out " + Path("r2.json")), 0);
  EXPECT_EQ(Read(Path("r.json")), Read(Path("r2.json")));
}

TEST_F(CliTest, BenchIsThreadCountIndependent) {
  Write("bench.json", R"({"families":[{"family":"gap","d":[3],"k":[2,4]},
      {"family":"random","d":[4],"n":[12],"count":2}],"algorithms":["det","rand","naive"],
      "trials":4})");
  std::string one;
  std::string many;
  ASSERT_EQ(Run("--seed 3 bench --config " + Path("bench.json") + " --threads 1", &one), 0);
  ASSERT_EQ(Run("--seed 3 bench --config " + Path("bench.json") + " --threads 4", &many), 0);
  EXPECT_EQ(one, many);
  const auto json = nlohmann::json::parse(one);
  EXPECT_FALSE(json["rows"].empty());
  for (const auto& row : json["rows"]) EXPECT_EQ(row["pass"], true) << row.dump();
}

TEST_F(CliTest, EmptyBenchConfigSucceeds) {
  Write("empty.json", "{}");
  std::string out;
  EXPECT_EQ(Run("bench --config " + Path("empty.json"), &out), 0);
  EXPECT_TRUE(nlohmann::json::parse(out)["rows"].empty());
}

TEST_F(CliTest, VerifyReportsInfeasibleSolution) {
  ASSERT_EQ(Run("gen gap --d 3 --k 2 --out " + Path("gap.json")), 0);
  Write("none.json", R"({"fast":[]})");
  EXPECT_EQ(Run("verify --instance " + Path("gap.json") + " --solution " + Path("none.json")), 1);
  Write("all.json", R"j({"fast":["(1,1)","(1,2)","(2,1)","(2,2)","(3,1)","(3,2)"]})j");
  EXPECT_EQ(Run("verify --instance " + Path("gap.json") + " --solution " + Path("all.json")), 0);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  Write("bad.json", "{not json");
  EXPECT_EQ(Run("solve --in " + Path("bad.json")), 2);
  EXPECT_EQ(Run("solve --in " + Path("missing.json")), 2);
  Write("cycle.json", R"({"jobs":[{"id":"a","alternatives":[[1,0]]},
      {"id":"b","alternatives":[[1,0]]}],"edges":[["a","b"],["b","a"]],"deadline":1})");
  EXPECT_EQ(Run("solve --in " + Path("cycle.json")), 2);
  EXPECT_EQ(Run("solve --algo nonsense"), 2);
}

TEST_F(CliTest, ResourceCapExitsThree) {
  ASSERT_EQ(Run("gen random --d 6 --n 40 --out " + Path("big.json")), 0);
  EXPECT_EQ(Run("exact tct --in " + Path("big.json") + " --cap 10"), 3);
}

TEST_F(CliTest, InfeasibleInstanceExitsOne) {
  Write("stuck.json", R"({"jobs":[{"id":"a","alternatives":[[5,0]]}],"edges":[],"deadline":1})");
  EXPECT_EQ(Run("solve --in " + Path("stuck.json")), 1);
}

TEST_F(CliTest, PackingCertificate) {
  std::string out;
  ASSERT_EQ(Run("certify packing --r 3 --d 5 --k 3", &out), 0);
  const auto json = nlohmann::json::parse(out);
  EXPECT_EQ(json["paths_disjoint"], true);
  EXPECT_EQ(json["cover_feasible"], true);
  EXPECT_EQ(json["opt"], 15);
}

}  // namespace
