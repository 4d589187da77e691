// Copyright 2026 The Authors.
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

// Runs the game binary end to end.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "mcg/io.hpp"

namespace mcg {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mcg_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) {
    fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    std::string cmd = std::string(MCG_GAME_BINARY) + " " + args + " > " + out.string() + " 2> " + err.string();
    int raw = std::system(cmd.c_str());
    return {WEXITSTATUS(raw), slurp(out), slurp(err)};
  }

  static std::string source(const std::string& relative) { return std::string(MCG_SOURCE_DIR) + "/" + relative; }
  fs::path dir_;
};

// "cost:count;..." back into comparable pairs.
std::vector<std::pair<Rational, int>> parse_potential(const std::string& text) {
  std::vector<std::pair<Rational, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    out.emplace_back(parse_rational_or_throw(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  return out;
}

TEST_F(Cli, SolveWritesDecreasingTrace) {
  fs::path trace = dir_ / "trace.csv";
  auto r = run("solve --input " + source("games/weighted_bottleneck.game") + " --seed 3 --trace " + trace.string());
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("terminal: PNE"), std::string::npos);
  std::stringstream csv(slurp(trace));
  std::string line;
  std::getline(csv, line);
  std::vector<std::vector<std::pair<Rational, int>>> potentials;
  while (std::getline(csv, line)) {
    if (line[0] == '#') {
      EXPECT_NE(line.find("terminal=PNE"), std::string::npos);
      break;
    }
    potentials.push_back(parse_potential(line.substr(line.rfind(',') + 1)));
  }
  for (std::size_t k = 1; k < potentials.size(); ++k) EXPECT_LT(potentials[k], potentials[k - 1]);
}

TEST_F(Cli, EnumerateFindsEquilibria) {
  auto r = run("enumerate --input " + source("games/table_aggregator.game"));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.find("pne_count: 0"), std::string::npos);
  EXPECT_NE(r.out.find("pne: "), std::string::npos);
}

TEST_F(Cli, ReduceWeightedThenSolveKeepsCosts) {
  fs::path src = dir_ / "weighted.game", red = dir_ / "reduced.game";
  ASSERT_EQ(run("generate --flavor weighted --players 3 --resources 5 --seed 7 --output " + src.string()).status, 0);
  ASSERT_EQ(run("reduce --mode weighted-to-setfunctional --input " + src.string() + " --output " + red.string()).status, 0);
  auto a = run("solve --input " + src.string() + " --trace " + (dir_ / "a.csv").string());
  auto b = run("solve --input " + red.string() + " --trace " + (dir_ / "b.csv").string());
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(b.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, CheckReportsVerdictsAndFailures) {
  auto ok = run("check --input " + source("games/race.game"));
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("aggregator.weakly_monotone: yes"), std::string::npos);
  auto mixed = run("check --input " + source("tests/fixtures/no_pne_mixed.game") + " --certificate " +
                   source("tests/fixtures/no_pne_mixed.cert"));
  EXPECT_EQ(mixed.status, 1);
  EXPECT_NE(mixed.out.find("certificate: valid"), std::string::npos);
  EXPECT_NE(mixed.out.find("mixed.equilibrium_class: no"), std::string::npos);

  fs::path bad = dir_ / "bad.game";
  std::ofstream(bad) << "[game]\nflavor: classic\nplayers: two\n";
  auto err = run("check --input " + bad.string());
  EXPECT_EQ(err.status, 2);
  EXPECT_NE(err.err.find("line 3, column 10"), std::string::npos) << err.err;
}

TEST_F(Cli, NonWeaklyMonotoneTableIsReportedWithWitness) {
  fs::path f = dir_ / "abs.game";
  std::ofstream(f) << "[game]\nflavor: complementarities\nplayers: 2\nresources: a b\n"
                      "[strategies]\n1: uniform 2 | a b\n2: uniform 2 | a b\n"
                      "[costs]\na: set 0 0 0 2\nb: set 0 0 0 2\n"
                      "[aggregator]\nkind: table\narity: 2\n"
                      "entry: 0 0 = 0\nentry: 0 2 = 2\nentry: 2 2 = 0\n";
  auto r = run("check --input " + f.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("aggregator.weakly_monotone: no (x=0, y=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("dynamics.certified: no"), std::string::npos);
}

TEST_F(Cli, SeedsReproduceFilesAndTraces) {
  auto g1 = run("generate --seed 99 --players 4 --resources 7");
  auto g2 = run("generate --seed 99 --players 4 --resources 7");
  EXPECT_EQ(g1.out, g2.out);
  fs::path f = dir_ / "g.game";
  std::ofstream(f) << g1.out;
  auto t1 = run("solve --input " + f.string() + " --seed 5");
  auto t2 = run("solve --input " + f.string() + " --seed 5");
  EXPECT_EQ(t1.out, t2.out);
}

TEST_F(Cli, CapBreachesExitNonzero) {
  EXPECT_EQ(run("enumerate --input " + source("games/weighted_bottleneck.game") + " --cap-profiles 3").status, 3);
  auto r = run("solve --input " + source("games/race.game") + " --cap-steps 1 --seed 0");
  EXPECT_NE(r.status, 1);
}

TEST_F(Cli, LocalOptimumIsAFailedSolve) {
  auto r = run("solve --input " + source("games/max_local_trap.game"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("terminal: local-optimum"), std::string::npos);
}

TEST_F(Cli, HuntGivesUpAfterAttempts) {
  auto r = run("hunt --attempts 3 --seed 1");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("found: no"), std::string::npos);
}

}  // namespace
}  // namespace mcg
