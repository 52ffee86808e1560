// Copyright 2026 The mbprice Authors
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

#include "mbprice/cli.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace mbprice::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mbprice_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

const char* kCrr = R"({"n": 1, "R": "1", "C": "100", "assets": [{"S0": "100", "D": "1/2", "U": "2"}]})";

TEST_F(CliTest, PriceCrrExample) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_price({write("crr.json", kCrr)}, out, err), 0) << err.str();
  const Json result = Json::parse(out.str());
  EXPECT_EQ(result["f_max"], "100/3");
  EXPECT_EQ(result["f_min"], "100/3");
  EXPECT_EQ(result["f_min_kind"], "exact");
  EXPECT_EQ(result["b"][0], "-1/3");
  EXPECT_EQ(result["discounted"], false);
}

TEST_F(CliTest, PriceCriterionBranch) {
  const std::string config = R"({"n": 2, "R": "1", "C": "150", "assets": [
      {"S0": "100", "D": "0.9", "U": "1.5"}, {"S0": "100", "D": "1/2", "U": "3/2"}]})";
  std::ostringstream out, err;
  ASSERT_EQ(cmd_price({write("m.json", config)}, out, err), 0) << err.str();
  const Json result = Json::parse(out.str());
  EXPECT_TRUE(result["criterion_met"].get<bool>());
  EXPECT_EQ(result["f_min_kind"], "exact");
}

TEST_F(CliTest, PriceRejectsInvalidMarket) {
  const std::string config = R"({"n": 1, "R": "1", "C": "100", "assets": [{"S0": "100", "D": "1", "U": "2"}]})";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_price({write("bad.json", config)}, out, err), 2);
  EXPECT_NE(err.str().find("0 < D < R < U"), std::string::npos);
  EXPECT_TRUE(out.str().empty());
}

TEST_F(CliTest, PriceRejectsFloatsAndMissingFiles) {
  std::ostringstream out, err;
  const std::string floats = R"({"n": 1, "R": 1.0, "C": "100", "assets": [{"S0": "100", "D": "1/2", "U": "2"}]})";
  EXPECT_EQ(cmd_price({write("f.json", floats)}, out, err), 2);
  EXPECT_NE(err.str().find("floating point"), std::string::npos);
  EXPECT_EQ(cmd_price({(dir_ / "missing.json").string()}, out, err), 2);
  EXPECT_EQ(cmd_price({write("broken.json", "{")}, out, err), 2);
  EXPECT_EQ(cmd_price({write("noassets.json", R"({"n": 1, "R": "1", "C": "1"})")}, out, err), 2);
}

TEST_F(CliTest, PriceWritesOutFileAndIsDeterministic) {
  const std::string config = write("crr.json", kCrr);
  std::ostringstream first, second, err;
  PriceOptions options{config, true, (dir_ / "result.json").string()};
  ASSERT_EQ(cmd_price(options, first, err), 0);
  EXPECT_TRUE(first.str().empty());
  std::ifstream file(*options.out);
  std::stringstream content;
  content << file.rdbuf();
  options.out.reset();
  ASSERT_EQ(cmd_price(options, second, err), 0);
  EXPECT_EQ(content.str(), second.str());
  EXPECT_EQ(Json::parse(second.str())["discounted"], true);
}

TEST_F(CliTest, PolytopeExamples) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_polytope({"0,0"}, out, err), 0);
  Json result = Json::parse(out.str());
  EXPECT_EQ(result["supervertex"], Json::parse(R"({"11": "1/2", "00": "1/2"})"));

  out.str("");
  ASSERT_EQ(cmd_polytope({"2, 0"}, out, err), 0);
  EXPECT_TRUE(Json::parse(out.str())["empty"].get<bool>());

  out.str("");
  ASSERT_EQ(cmd_polytope({"-1/2,-0.5"}, out, err), 0);
  result = Json::parse(out.str());
  EXPECT_TRUE(result["criterion_met"].get<bool>());
  EXPECT_EQ(result["subvertex"], Json::parse(R"({"11": "1/2", "01": "1/4", "10": "1/4"})"));

  EXPECT_EQ(cmd_polytope({"1/2,x"}, out, err), 2);
  EXPECT_EQ(cmd_polytope({""}, out, err), 2);
}

TEST_F(CliTest, RoundTripOfRationals) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_polytope({"1/3,-2/7,5/11"}, out, err), 0);
  const Json result = Json::parse(out.str());
  std::vector<Rational> b;
  for (const auto& v : result["b"]) b.push_back(rational_from_json(v, "b"));
  EXPECT_EQ(b, (std::vector<Rational>{Rational(1, 3), Rational(-2, 7), Rational(5, 11)}));
  for (const auto& [bits, weight] : result["supervertex"].items()) {
    EXPECT_EQ(rational_to_json(rational_from_json(weight, bits)), weight);
  }
  EXPECT_EQ(rational_from_json(Json(3), "x"), 3);
  EXPECT_THROW(rational_from_json(Json(0.5), "x"), std::exception);
}

TEST_F(CliTest, VerifyDefaultsPass) {
  VerifyOptions options;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_verify(options, out, err), 0) << err.str();
  const Json report = Json::parse(out.str());
  EXPECT_TRUE(report["ok"].get<bool>());
  ASSERT_EQ(report["checks"].size(), 5u);
  for (const auto& check : report["checks"]) EXPECT_EQ(check["count"], check["passed"]);
  std::ostringstream again;
  cmd_verify(options, again, err);
  EXPECT_EQ(out.str(), again.str());
}

TEST_F(CliTest, VerifyEmptyRun) {
  VerifyOptions options;
  options.config.cases = 0;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_verify(options, out, err), 0);
  EXPECT_TRUE(Json::parse(out.str())["checks"].empty());
}

TEST_F(CliTest, VerifyCorruptedSupervertexFails) {
  VerifyOptions options;
  options.config.cases = 20;
  options.config.corrupt_supervertex = true;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_verify(options, out, err), 1);
  const Json report = Json::parse(out.str());
  EXPECT_FALSE(report["ok"].get<bool>());
  EXPECT_EQ(report["counterexample"]["check"], "max_at_supervertex");
  EXPECT_FALSE(report["counterexample"]["b"].empty());
  EXPECT_FALSE(report["counterexample"]["u"].empty());
}

TEST_F(CliTest, VerifyRejectsBadSizes) {
  VerifyOptions options;
  options.config.max_m = 0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(options, out, err), 2);
}

TEST_F(CliTest, ExpectConstantPolicy) {
  const std::string config = write("crr.json", kCrr);
  std::ostringstream out, err;
  ExpectOptions options{config, "constant", "2/3,1/3"};
  ASSERT_EQ(cmd_expect(options, out, err), 0) << err.str();
  Json result = Json::parse(out.str());
  EXPECT_EQ(result["expectation"], "200/3");
  EXPECT_FALSE(result["in_polytope"].get<bool>());

  out.str("");
  options.density = "1/3,2/3";
  ASSERT_EQ(cmd_expect(options, out, err), 0);
  result = Json::parse(out.str());
  EXPECT_EQ(result["expectation"], "100/3");
  EXPECT_TRUE(result["in_polytope"].get<bool>());

  EXPECT_EQ(cmd_expect({config, "constant", "1/2"}, out, err), 2);
  EXPECT_EQ(cmd_expect({config, "constant", "1,1"}, out, err), 2);
  EXPECT_EQ(cmd_expect({config, "adaptive", "1/2,1/2"}, out, err), 2);
}

#ifdef MBPRICE_EXE
int shell(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

int run(const std::string& args) { return shell(std::string(MBPRICE_EXE) + " " + args); }

TEST_F(CliTest, ExecutableExitCodes) {
  const std::string config = write("crr.json", kCrr);
  EXPECT_EQ(run("price --config " + config), 0);
  EXPECT_EQ(run("price --config " + (dir_ / "nope.json").string()), 2);
  EXPECT_EQ(run("polytope --b 1/2,-1/3,0"), 0);
  EXPECT_EQ(run("verify --m 2 --n 2 --cases 10 --seed 3"), 0);
  EXPECT_EQ(run("verify --cases 0"), 0);
  EXPECT_EQ(run("verify --cases 10 --corrupt-supervertex"), 1);
  EXPECT_EQ(run("--threads 2 expect --config " + config + " --density 1/3,2/3"), 0);
  EXPECT_EQ(run("bogus"), 2);
  EXPECT_EQ(run("polytope"), 2);
}

TEST_F(CliTest, OracleCapFromEnvironment) {
  const std::string config = write("m.json", R"({"n": 3, "R": "1", "C": "1",
      "assets": [{"S0": "1", "D": "1/2", "U": "2"}, {"S0": "1", "D": "1/2", "U": "2"}]})");
  EXPECT_EQ(run("expect --config " + config + " --density 1/4,1/4,1/4,1/4"), 0);
  EXPECT_EQ(shell("MB_MAX_ORACLE_BITS=4 " + std::string(MBPRICE_EXE) + " expect --config " + config +
                  " --density 1/4,1/4,1/4,1/4"),
            2);
}
#endif

}  // namespace
}  // namespace mbprice::cli
