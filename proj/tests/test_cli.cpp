// Copyright 2026 The kcut-qaoa Authors
//
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


// End-to-end checks of the command-line tool.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(KCUT_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("kcut_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

TEST(Cli, SolveBarbellBinary) {
  const auto dir = scratch("solve");
  const auto r = run("solve --graph barbell --k 2 --scheme binary --p 3 --out " + dir.string());
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("alpha: 1.000 1.000 1.000"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir / "run.json"));
  EXPECT_TRUE(fs::exists(dir / "params.csv"));
}

TEST(Cli, SolveIsByteIdentical) {
  const auto a = scratch("det_a"), b = scratch("det_b");
  const std::string args = "solve --graph er:6,0.5 --seed 4 --k 3 --scheme binary --p 2 --out ";
  ASSERT_EQ(run(args + a.string()).status, 0);
  ASSERT_EQ(run(args + b.string()).status, 0);
  EXPECT_EQ(slurp(a / "run.json"), slurp(b / "run.json"));
  EXPECT_EQ(slurp(a / "params.csv"), slurp(b / "params.csv"));
  EXPECT_NE(slurp(a / "run.json").find("\"seed\": 4"), std::string::npos);
}

TEST(Cli, SolveOneHotXK8Collapses) {
  const auto dir = scratch("onehot8");
  const auto r = run("solve --graph barbell --k 8 --scheme onehot-x --p 1 --out " + dir.string());
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("alpha: 0.00"), std::string::npos) << r.out;
}

TEST(Cli, Landscape) {
  const auto dir = scratch("land");
  ASSERT_EQ(run("landscape --graph barbell --k 2 --out " + dir.string()).status, 0);
  std::istringstream in(slurp(dir / "landscape.csv"));
  std::size_t rows = 0;
  double gamma_zero_first = 0.0;
  bool header = false;
  for (std::string line; std::getline(in, line);) {
    if (line.starts_with("#")) continue;
    if (!header) {
      EXPECT_EQ(line, "gamma,beta,energy");
      header = true;
      continue;
    }
    ++rows;
    double g, b, e;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf", &g, &b, &e), 3);
    if (g == 0.0) {
      if (rows == 1) gamma_zero_first = e;
      EXPECT_NEAR(e, gamma_zero_first, 1e-10);
    }
  }
  EXPECT_EQ(rows, 400u);
  EXPECT_EQ(run("landscape --graph barbell --k 2 --p 2 --out " + dir.string()).status, 1);
}

TEST(Cli, Resources) {
  const auto r = run("resources --graph er:10,0.36 --seed 11 --scheme binary --k-min 3 --k-max 3");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("|E|=16"), std::string::npos);
  EXPECT_NE(r.out.find("binary            3      22        0         0      1120         1120"),
            std::string::npos)
      << r.out;
}

TEST(Cli, BruteForce) {
  auto r = run("brute-force --graph barbell --k 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("best 1\n"), std::string::npos);
  const auto tri = scratch("tri.txt");
  std::ofstream(tri) << "p 3 3\ne 0 1 1\ne 1 2 1\ne 0 2 1\n";
  r = run("brute-force --graph " + tri.string() + " --k 3");
  EXPECT_NE(r.out.find("best 3\n"), std::string::npos);
  r = run("brute-force --graph " + std::string(KCUT_TEST_DATA) + "/er10_p036_s11.txt --k 2");
  EXPECT_NE(r.out.find("best 14\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --bogus").status, 1);
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("brute-force --graph /nonexistent/graph.txt").status, 1);
  const auto bad = scratch("bad.txt");
  std::ofstream(bad) << "p 2 1\ne 1 1 1\n";
  const auto r = run("brute-force --graph " + bad.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
  EXPECT_EQ(run("solve --graph er:14,0.3 --k 2 --scheme onehot-x --out " + scratch("cap").string()).status, 2);
  EXPECT_EQ(run("solve --graph barbell --k 3 --scheme onehot-penalty --penalty-beta 1").status, 1);
}

TEST(Cli, CircuitAndDumps) {
  auto r = run("circuit --graph barbell --k 3 --gamma 0.4");
  ASSERT_EQ(r.status, 0) << r.out;
  std::size_t cx = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) cx += line.starts_with("cx ");
  EXPECT_EQ(cx, 70u);
  const auto dir = scratch("dumps");
  EXPECT_EQ(run("diagonal --graph barbell --k 3 --out " + dir.string()).status, 0);
  EXPECT_NE(slurp(dir / "diagonal.csv").find("\n15,1,0\n"), std::string::npos);
  EXPECT_EQ(run("probabilities --graph barbell --k 2 --gammas 0 --betas 0 --out " + dir.string()).status, 0);
  EXPECT_NE(slurp(dir / "probabilities.csv").find("\n3,0.25"), std::string::npos);
  r = run("generate --graph ba:10,3 --seed 1");
  EXPECT_NE(r.out.find("p 10 21"), std::string::npos);
}

}  // namespace
