// Copyright 2026 The walshgl Authors.
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

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "json.hpp"
#include "oracles.h"

namespace walshgl::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tt(const std::string& name) { return testing::data_path(name); }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Sets an environment variable for the lifetime of the object.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    setenv(name, value, 1);
  }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("walshgl_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

TEST(Cli, SpectrumCsv) {
  Result r = run_cli({"spectrum", "--tt", tt("four_term.tt")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "index,bitstring,W,S");
  EXPECT_NE(r.out.find("\n9,1001,8,0.5\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n11,1011,-8,-0.5\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n0,0000,0,0\n"), std::string::npos);
  EXPECT_NE(r.err.find("sum W^2 = 256"), std::string::npos);
  EXPECT_NE(r.err.find("ok"), std::string::npos);
}

TEST(Cli, SpectrumJsonAndBinary) {
  Result r = run_cli({"spectrum", "--anf", "x1+x2+x2*x3+x3*x4", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  json j = json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["W"][9], 8);
  EXPECT_EQ(j["W"][11], -8);

  TempDir dir;
  Result b = run_cli({"spectrum", "--tt", tt("four_term.tt"), "--format", "bin", "--out",
                      (dir / "s.bin").string()});
  ASSERT_EQ(b.code, kOk);
  EXPECT_TRUE(b.out.empty());
  std::string bytes = read_file(dir / "s.bin");
  ASSERT_EQ(bytes.size(), 8u + 16u * 8u);
  EXPECT_EQ(bytes[0], 4);
}

TEST(Cli, SpectrumOfSboxComponent) {
  Result r = run_cli({"spectrum", "--sbox", tt("aes.sbox"), "--component", "0x01",
                      "--top", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.err.find("00101101  W=-32"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"spectrum", "--sbox", tt("aes.sbox")}).code, kUsage);
  EXPECT_EQ(run_cli({"spectrum", "--tt", tt("four_term.tt"), "--component", "1"}).code,
            kUsage);
}

TEST(Cli, SampleBernsteinVazirani) {
  for (const char* mode : {"spectral", "statevector"}) {
    Result r = run_cli({"sample", "--anf", "x1+x3", "--n", "3", "--draws", "20",
                        "--seed", "4", "--mode", mode});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["mode"], mode);
    EXPECT_EQ(j["rng"], "splitmix64/v1");
    ASSERT_EQ(j["draws"].size(), 20u);
    for (const auto& d : j["draws"]) EXPECT_EQ(d, "101");
    EXPECT_EQ(j["counts"]["101"], 20);
  }
}

TEST(Cli, SampleAmplitudeDump) {
  TempDir dir;
  const std::string path = (dir / "amps.csv").string();
  Result r = run_cli({"sample", "--anf", "x1*x2", "--mode", "statevector",
                      "--amplitudes", path, "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::string dump = read_file(path);
  EXPECT_EQ(dump.substr(0, dump.find('\n')), "index,re,im");
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 1 + 8);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "draw,bitstring");
  EXPECT_EQ(run_cli({"sample", "--anf", "x1", "--amplitudes", path}).code, kUsage);
}

TEST(Cli, SampleSboxComponent) {
  Result r = run_cli({"sample", "--sbox", tt("id3.sbox"), "--component", "5", "--draws",
                      "10", "--mode", "statevector"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["b"], "101");
  for (const auto& d : j["draws"]) EXPECT_EQ(d, "101");
  EXPECT_EQ(run_cli({"sample", "--sbox", tt("id3.sbox"), "--component", "8"}).code,
            kUsage);
}

TEST(Cli, GlFourTerm) {
  Result r = run_cli({"gl", "--tt", tt("four_term.tt"), "--eps", "0.4", "--delta", "0.05",
                      "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["params"]["l"], 937);
  EXPECT_EQ(j["params"]["count_threshold"], 75);
  EXPECT_EQ(j["queries"], 937);
  ASSERT_EQ(j["entries"].size(), 4u);
  std::vector<std::string> as;
  for (const auto& e : j["entries"]) as.push_back(e["a"]);
  EXPECT_EQ(as, (std::vector<std::string>{"1001", "1011", "1100", "1110"}));
  EXPECT_EQ(j["entries"][1]["exact_S"], -0.5);
  EXPECT_EQ(j["verification"]["complete"], true);
  EXPECT_EQ(j["verification"]["sound"], true);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["mode"], "spectral");
  EXPECT_NE(r.err.find("l=937"), std::string::npos);
  EXPECT_NE(r.err.find("queries=937"), std::string::npos);
}

TEST(Cli, GlIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"gl", "--anf", "x1*x2+x3*x4+x5", "--eps", "0.3",
                                      "--seed", "99", "--mode", "statevector"};
  Result a = run_cli(args);
  Result b = run_cli(args);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  Result c = run_cli({"gl", "--anf", "x1*x2+x3*x4+x5", "--eps", "0.3", "--seed", "99",
                      "--format", "csv"});
  ASSERT_EQ(c.code, kOk);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "a,b,count,exact_S");
}

TEST(Cli, GlIdentitySbox) {
  Result r = run_cli({"gl", "--sbox", tt("id3.sbox"), "--eps", "0.4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["m"], 3);
  ASSERT_EQ(j["entries"].size(), 7u);
  for (const auto& e : j["entries"]) EXPECT_EQ(e["a"], e["b"]);
  EXPECT_EQ(j["queries"], 7 * 937);
  EXPECT_EQ(run_cli({"gl", "--sbox", tt("id3.sbox"), "--component", "1"}).code, kUsage);
}

TEST(Cli, StrictConfidence) {
  Result r = run_cli({"gl", "--anf", "x1+x2+x2*x3+x3*x4", "--strict-confidence"});
  ASSERT_EQ(r.code, kOk);
  json j = json::parse(r.out);
  EXPECT_EQ(j["params"]["strict_confidence"], true);
  EXPECT_DOUBLE_EQ(j["params"]["delta"].get<double>(), 0.002);
  EXPECT_DOUBLE_EQ(j["params"]["delta_requested"].get<double>(), 0.05);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--tt", tt("four_term.tt")}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--eps", "1.5"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--eps", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--eps", "abc"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--delta", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--mode", "grover"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--anf", "x1", "--bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"gl", "--tt", tt("missing.tt")}).code, kUsage);
  Result bad = run_cli({"spectrum", "--anf", "x1+x2x3"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("position 5"), std::string::npos) << bad.err;
}

TEST(Cli, Help) {
  Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("spectrum"), std::string::npos);
}

TEST(Cli, CapacityCap) {
  EXPECT_EQ(run_cli({"spectrum", "--anf", "x1", "--n", "25"}).code, kCapacity);
  ScopedEnv cap("WALSHGL_MAX_N", "3");
  Result r = run_cli({"gl", "--tt", tt("four_term.tt")});
  EXPECT_EQ(r.code, kCapacity);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  EXPECT_EQ(run_cli({"gl", "--sbox", tt("id3.sbox")}).code, kOk);
}

TEST(Cli, CapacityCapNeverRaises) {
  ScopedEnv cap("WALSHGL_MAX_N", "40");
  EXPECT_EQ(run_cli({"spectrum", "--anf", "x1", "--n", "25"}).code, kCapacity);
}

TEST(Cli, OracleBudget) {
  ScopedEnv budget("WALSHGL_ORACLE_BUDGET", "8");
  EXPECT_EQ(run_cli({"gl", "--tt", tt("four_term.tt"), "--verify"}).code,
            kVerificationInfeasible);
  Result skipped = run_cli({"gl", "--tt", tt("four_term.tt")});
  EXPECT_EQ(skipped.code, kOk);
  EXPECT_NE(skipped.err.find("skipped"), std::string::npos);
  EXPECT_EQ(json::parse(skipped.out).contains("verification"), false);
  EXPECT_EQ(run_cli({"verify", "--tt", tt("four_term.tt")}).code,
            kVerificationInfeasible);
  EXPECT_EQ(run_cli({"gl", "--sbox", tt("id3.sbox"), "--verify"}).code,
            kVerificationInfeasible);
}

TEST(Cli, VerifyFourTerm) {
  Result r = run_cli({"verify", "--tt", tt("four_term.tt"), "--runs", "200"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["runs"], 200);
  EXPECT_EQ(j["designated"]["a"], "1001");
  EXPECT_EQ(j["gate"]["passed"], true);
  EXPECT_EQ(j["outcomes"].size(), 200u);
  EXPECT_NE(r.err.find("PASS"), std::string::npos);

  Result w = run_cli({"verify", "--tt", tt("four_term.tt"), "--w0", "1011", "--runs", "100",
                      "--format", "csv"});
  ASSERT_EQ(w.code, kOk);
  EXPECT_EQ(w.out.substr(0, w.out.find(',')), "fixture");
  EXPECT_EQ(run_cli({"verify", "--tt", tt("four_term.tt"), "--w0", "0000"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify", "--tt", tt("four_term.tt"), "--w0", "101"}).code, kUsage);
}

TEST(Cli, VerifySbox) {
  Result r = run_cli({"verify", "--sbox", tt("sbox3.sbox"), "--eps", "0.45", "--runs",
                      "100", "--w0", "011", "--b0", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["designated"]["a"], "011");
  EXPECT_EQ(j["designated"]["b"], "001");
  EXPECT_EQ(run_cli({"verify", "--sbox", tt("sbox3.sbox"), "--w0", "011"}).code, kUsage);
}

TEST(Cli, VerifyRejectsTooFewRuns) {
  EXPECT_EQ(run_cli({"verify", "--tt", tt("four_term.tt"), "--runs", "50"}).code, kUsage);
}

TEST(Cli, VerifyReportsStatisticalFailure) {
  Result r = run_cli({"verify", "--anf", "x1*x4+x2*x5+x3*x6", "--eps", "0.26", "--delta",
                      "0.1", "--runs", "100", "--threshold-scale", "0.5"});
  EXPECT_EQ(r.code, kStatisticalFailure);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
  EXPECT_NE(r.err.find("vacuous"), std::string::npos);
  Result ok = run_cli({"verify", "--anf", "x1*x4+x2*x5+x3*x6", "--eps", "0.26", "--delta",
                       "0.1", "--runs", "100"});
  EXPECT_EQ(ok.code, kOk);
}

}  // namespace
}  // namespace walshgl::cli
