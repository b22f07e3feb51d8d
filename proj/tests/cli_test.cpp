// Copyright 2026 The ehrtomo Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ehrtomo/body_json.hpp"
#include "ehrtomo/cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using ehrtomo::cli::run;

namespace {

const std::string kData = EHRTOMO_TEST_DATA;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ehrtomo_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                       "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& content) const { std::ofstream(dir_ / name) << content; }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CountPrintsNine) {
  const Result r = call({"count", "--body", data("square.json"), "--dilate", "5/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "9\n");
  EXPECT_EQ(call({"count", "--body", data("square01.json"), "--dilate", "5/2"}).out, "9\n");
  EXPECT_EQ(call({"count", "--body", data("square.json"), "--translate", "1,0", "--dilate", "1/2"}).out, "1\n");
}

TEST_F(CliTest, BrightnessPrintsOne) {
  const Result r = call({"brightness", "--body", data("square01.json"), "--dir", "0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(call({"brightness", "--body", data("square.json"), "--dir", "1,1", "--method", "facet-sum"}).out.substr(0, 8),
            "1.414213");
}

TEST_F(CliTest, CompareSquareAndDiskIsDistinct) {
  const Result r = call({"compare", "--a", data("sym-square.json"), "--b", data("disk.json"), "--height", "2",
                         "--mu-max", "64", "--tol", "0.05"});
  EXPECT_EQ(r.code, 10);
  EXPECT_NE(r.out.find("distinct"), std::string::npos);
  EXPECT_NE(r.out.find("witness 1,0\n"), std::string::npos);
}

TEST_F(CliTest, CompareExitCodes) {
  EXPECT_EQ(call({"compare", "--a", data("sym-square.json"), "--b", data("sym-square.json")}).code, 0);
  write("d1.json", R"({"type":"ball","center":["0","0"],"radius":"1"})");
  write("d2.json", R"({"type":"ball","center":["0","0"],"radius":"1001/1000"})");
  const Result r = call({"compare", "--a", tmp("d1.json"), "--b", tmp("d2.json"), "--height", "1", "--tol", "0.001",
                         "--samples", "100000"});
  EXPECT_EQ(r.code, 11) << r.out;
  EXPECT_NE(r.out.find("inconclusive"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"count"}).code, 2);
  EXPECT_EQ(call({"count", "--body", data("square.json"), "--dilate", "0.5"}).code, 2);
  EXPECT_EQ(call({"count", "--body", tmp("missing.json")}).code, 2);
  write("bad.json", "{not json");
  EXPECT_EQ(call({"count", "--body", tmp("bad.json")}).code, 2);
  write("float.json", R"({"type":"ball","center":[0.5,0],"radius":"1"})");
  EXPECT_EQ(call({"count", "--body", tmp("float.json")}).code, 2);
  EXPECT_EQ(call({"brightness", "--body", data("square.json"), "--dir", "0,1", "--method", "magic"}).code, 2);
}

TEST_F(CliTest, PreconditionErrorsExitThree) {
  Result r = call({"converge-ppyr", "--body", data("square.json"), "--dir", "1,0", "--mu-schedule", "1,2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("MuTooSmall"), std::string::npos);
  r = call({"sphere-area", "--body", data("sym-square.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("OriginInside"), std::string::npos);
  r = call({"hausdorff", "--a", data("square.json"), "--b", data("simplex3.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("DimensionMismatch"), std::string::npos);
  r = call({"brightness", "--body", data("square.json"), "--dir", "0,0,1"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, OtherSubcommands) {
  EXPECT_EQ(call({"profile", "--body", data("square.json"), "--s-list", "1,2,3"}).out, "1,4\n2,9\n3,16\n");
  EXPECT_EQ(call({"ppyr-volume", "--body", data("square.json"), "--translate", "4,0"}).out, "3\n");
  EXPECT_EQ(call({"radii", "--body", data("square.json"), "--translate", "4,0"}).out,
            "R 5.0990195135927845\nr 4.1231056256176606\n");
  EXPECT_EQ(call({"hausdorff", "--a", data("square.json"), "--b", data("square01.json")}).out, "0\n");
  EXPECT_EQ(call({"sphere-area", "--body", data("square.json"), "--translate", "5,3"}).out.substr(0, 7), "0.21109");
  const Result cs = call({"converge-sphere", "--body", data("square.json"), "--dir", "1,0", "--mu-schedule", "8,16"});
  EXPECT_EQ(cs.code, 0);
  EXPECT_EQ(cs.out.substr(0, cs.out.find('\n')), "mu,estimate,reference,abs_error,estimate_stderr");
  const Result cp = call({"converge-ppyr", "--body", data("square.json"), "--dir", "1,0", "--mu-schedule", "64"});
  EXPECT_NE(cp.out.find("\n64,1.03125,1,0.03125,0,33,"), std::string::npos) << cp.out;
  const Result pr = call({"probe", "--a", data("sym-square.json"), "--b", data("rotated-square.json"), "--height", "1"});
  EXPECT_EQ(pr.code, 0);
  EXPECT_EQ(pr.out.rfind("mismatch", 0), 0u);
  EXPECT_EQ(call({"probe", "--a", data("sym-square.json"), "--b", data("sym-square.json"), "--height", "1"}).out,
            "no mismatch\n");
}

TEST_F(CliTest, HelpDocumentsColumns) {
  const Result r = call({"converge-ppyr", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CSV columns: mu,estimate"), std::string::npos);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliTest, OutputFilesAndManifest) {
  const std::string out = tmp("run");
  const Result r = call({"compare", "--a", data("sym-square.json"), "--b", data("disk.json"), "--out", out,
                         "--samples", "200000", "--seed", "7"});
  ASSERT_EQ(r.code, 10);
  const std::string csv = slurp(out + ".csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "direction,va,vb,va_raw,vb_raw,err_a,err_b,gap,tolerance");
  const auto m = nlohmann::json::parse(slurp(out + ".manifest.json"));
  EXPECT_EQ(m["subcommand"], "compare");
  EXPECT_EQ(m["parameters"]["seed"], 7);
  EXPECT_EQ(m["parameters"]["samples"], 200000);
  EXPECT_EQ(m["parameters"]["height"], 2);
  EXPECT_EQ(m["parameters"]["tol"], 0.05);
  EXPECT_EQ(m["inputs"]["a"], data("sym-square.json"));
  EXPECT_TRUE(m.contains("version"));
  EXPECT_TRUE(m.contains("duration_seconds"));
  const auto s = nlohmann::json::parse(slurp(out + ".summary.json"));
  EXPECT_EQ(s["verdict"], "distinct");
  EXPECT_EQ(s["witness"], "1;0");
  // Emitted bodies reparse to the loaded ones.
  EXPECT_EQ(ehrtomo::body_from_json(m["bodies"]["b"]), ehrtomo::load_body(data("disk.json")));
  EXPECT_EQ(ehrtomo::body_from_json(m["bodies"]["a"]), ehrtomo::load_body(data("sym-square.json")));
}

TEST_F(CliTest, OutputsIndependentOfThreads) {
  const std::vector<std::vector<std::string>> runs = {
      {"compare", "--a", data("sym-square.json"), "--b", data("disk.json"), "--samples", "200000"},
      {"ppyr-volume", "--body", data("disk.json"), "--translate", "5,1", "--samples", "300000"},
      {"profile", "--body", data("disk.json"), "--translate", "1,0"}};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto a = runs[i], b = runs[i];
    a.insert(a.end(), {"--threads", "1", "--out", tmp("a" + std::to_string(i))});
    b.insert(b.end(), {"--threads", "3", "--out", tmp("b" + std::to_string(i))});
    EXPECT_EQ(call(a).code, call(b).code);
    EXPECT_EQ(slurp(tmp("a" + std::to_string(i)) + ".csv"), slurp(tmp("b" + std::to_string(i)) + ".csv"));
  }
}
