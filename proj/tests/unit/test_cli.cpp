// Copyright 2026 The qsearch Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qsearch/cli.hpp"
#include "qsearch/circuit_io.hpp"

namespace qsearch {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTitanic = std::string(QSEARCH_DATA_DIR) + "/titanic.csv";

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qsearch_cli_test_" + name);
}

TEST(Cli, SampleSize) {
  const auto r = run({"sample-size", "--confidence", "0.95", "--error", "0.05"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "385\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"sample-size", "--bogus"}).code, 1);
  const auto bad = run({"sample-size", "--error", "abc"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("abc"), std::string::npos);
  const auto list = run({"build-oracle", "--n", "2", "--marked", "2,x"});
  EXPECT_EQ(list.code, 1);
  EXPECT_NE(list.err.find("'x'"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DataErrors) {
  EXPECT_EQ(run({"find-min", "/nonexistent.csv"}).code, 2);
  const auto p = temp_path("dup.csv");
  std::ofstream(p) << "label,value\na,7\nb,7\n";
  const auto r = run({"find-min", p.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"build-oracle", "--n", "2", "--marked", "4"}).code, 2);
}

TEST(Cli, FindMinJsonIsDeterministic) {
  const std::vector<std::string> args{"find-min", kTitanic, "--c", "3", "--trials", "40",
                                      "--seed", "7", "--threads", "3"};
  const auto a = run(args);
  auto single = args;
  single.back() = "1";
  const auto b = run(single);
  ASSERT_EQ(a.code, 0) << a.err;
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["true_extremum"], 1);
  EXPECT_EQ(doc["records"], 36);
  EXPECT_EQ(doc["results"].size(), 40u);
  EXPECT_EQ(doc["invocation"], "qsearch find-min " + kTitanic + " --c 3 --trials 40 --seed 7 --threads 3");
  // Same results regardless of thread count.
  auto doc_b = nlohmann::json::parse(b.out);
  EXPECT_EQ(doc["results"], doc_b["results"]);
}

TEST(Cli, FindMaxCsv) {
  const auto r = run({"find-max", kTitanic, "--trials", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# qsearch find-max", 0), 0u);
  EXPECT_NE(r.out.find("\ntrial,seed,value,"), std::string::npos);
}

TEST(Cli, Strategies) {
  for (const char* s : {"uniform", "sampled", "exact"}) {
    EXPECT_EQ(run({"find-min", kTitanic, "--strategy", s, "--trials", "3"}).code, 0) << s;
  }
  EXPECT_EQ(run({"find-min", kTitanic, "--strategy", "magic"}).code, 1);
}

TEST(Cli, BaselineDha) {
  const auto r = run({"baseline-dha", kTitanic, "--trials", "4", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["results"].size(), 4u);
}

TEST(Cli, AnalysisCsvs) {
  const auto map = run({"failure-map", "--resolution", "10"});
  ASSERT_EQ(map.code, 0);
  EXPECT_NE(map.out.find("ratio_true,ratio_est,failure\n"), std::string::npos);
  EXPECT_EQ(std::count(map.out.begin(), map.out.end(), '\n'), 102);
  EXPECT_EQ(run({"failure-map", "--resolution", "5"}).code, 1);

  const auto cx = run({"complexity", "--nmin", "2^8", "--nmax", "2^10"});
  ASSERT_EQ(cx.code, 0);
  EXPECT_EQ(std::count(cx.out.begin(), cx.out.end(), '\n'), 5);

  const auto curves = run({"failure-curves", "--E", "0.05,0.1", "--resolution", "5", "--draws", "5"});
  ASSERT_EQ(curves.code, 0) << curves.err;
  EXPECT_EQ(std::count(curves.out.begin(), curves.out.end(), '\n'), 2 + 2 * 4);
}

TEST(Cli, BuildOracleThenSimulate) {
  const auto qc = temp_path("oracle.qc");
  const auto b = run({"build-oracle", "--n", "2", "--marked", "2,3", "--phi", "1.5707963",
                      "--simplify", "--out", qc.string()});
  ASSERT_EQ(b.code, 0) << b.err;
  const auto cost = nlohmann::json::parse(b.out);
  EXPECT_EQ(cost["n_two_qubit_equiv"], 1);

  const auto s = run({"simulate", qc.string(), "--initial", "set:0,2,3", "--grover-iterations",
                      "1", "--phi", "1.5707963", "--marked", "2,3"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto pos = s.out.find("# marked_probability: ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(s.out.substr(pos + 22)), 0.963, 1e-3);
}

TEST(Cli, BuildOracleToStdoutAndThreshold) {
  const auto r = run({"build-oracle", "--n", "6", "--threshold-le", "47", "--phi", "pi/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_circuit(r.out).num_qubits(), 6u);
  EXPECT_EQ(run({"build-oracle", "--n", "2"}).code, 1);
}

TEST(Cli, SimplifyAndSimulateInitials) {
  const auto qc = temp_path("plain.qc");
  std::ofstream(qc) << run({"build-oracle", "--n", "3", "--marked", "1,3"}).out;
  const auto s = run({"simplify", qc.string()});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, "qubits: 3\nPHASE(3.141592653589793) 0 | controls: -q2\n");
  for (const char* init : {"uniform", "basis:3", "set:1,2"}) {
    EXPECT_EQ(run({"simulate", qc.string(), "--initial", init}).code, 0) << init;
  }
  EXPECT_EQ(run({"simulate", qc.string(), "--initial", "weird"}).code, 1);
  EXPECT_EQ(run({"simulate", qc.string(), "--grover-iterations", "1"}).code, 1);
}

}  // namespace
}  // namespace qsearch
