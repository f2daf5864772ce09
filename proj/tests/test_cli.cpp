// Copyright 2026 The heisim Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "cli_app.hpp"
#include "json.hpp"

namespace heisim::cli {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "heisim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(ParseAngle, Forms) {
  EXPECT_DOUBLE_EQ(*parse_angle("0.5"), 0.5);
  EXPECT_DOUBLE_EQ(*parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(*parse_angle("-pi/4"), -kPi / 4);
  EXPECT_DOUBLE_EQ(*parse_angle("3*pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(*parse_angle("2pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(*parse_angle("\xcf\x80/3"), kPi / 3);
  EXPECT_DOUBLE_EQ(*parse_angle("PI/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(*parse_angle("90", true), kPi / 2);
  EXPECT_DOUBLE_EQ(*parse_angle("1e-3"), 1e-3);
  for (const char* bad : {"", "abc", "pi/0", "pi/", "--1", "1.5x", "nan", "inf", "pi*2", "1e999"}) {
    EXPECT_FALSE(parse_angle(bad).has_value()) << bad;
  }
}

TEST(Verify, PassesAndExitsZero) {
  const Result r = invoke({"verify"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("11/11 checks passed"), std::string::npos);
  const Result j = invoke({"verify", "--json"});
  EXPECT_EQ(j.code, 0);
  const json parsed = json::parse(j.out);
  EXPECT_TRUE(parsed["passed"].get<bool>());
  EXPECT_EQ(parsed["checks"].size(), 11u);
}

TEST(Epr, EqualAngles) {
  const Result r = invoke({"epr", "--theta", "0.3", "--phi", "0.3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["p_joint_t2"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["p_diff_t4"].get<double>(), 0.0, 1e-12);
}

TEST(Epr, OppositeAngles) {
  const Result r = invoke({"epr", "--theta", "pi", "--phi", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["p_joint_t2"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(j["p_diff_t4"].get<double>(), 1.0, 1e-12);
}

TEST(Epr, ShowDescriptors) {
  const Result r = invoke({"epr", "--theta", "pi/3", "--phi", "0", "--show-descriptors"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("+0.866025 * Y2 X3"), std::string::npos) << r.out;
  const Result d = invoke({"epr", "--theta", "60", "--phi", "0", "--degrees", "--show-descriptors", "--format", "json"});
  EXPECT_EQ(json::parse(d.out)["theta"].get<double>(), 1.0471975512);
}

TEST(Epr, UsageErrors) {
  EXPECT_EQ(invoke({"epr", "--theta", "abc", "--phi", "0"}).code, 2);
  EXPECT_EQ(invoke({"epr", "--theta", "0"}).code, 2);
  EXPECT_EQ(invoke({"epr", "--theta", "0", "--phi", "0", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Sweep, RowsFollowClosedForms) {
  const Result r = invoke({"sweep", "--points", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  for (int k = 0; k < 5; ++k) {
    std::stringstream in(rows[k + 1]);
    std::vector<double> v;
    for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
    const double diff = 2 * kPi * k / 5;
    EXPECT_NEAR(v[0] - v[1], diff, 1e-10);
    EXPECT_NEAR(v[2], 0.5 * std::pow(std::cos(diff / 2), 2), 1e-10);
    EXPECT_NEAR(v[4], std::pow(std::sin(diff / 2), 2), 1e-10);
  }
  EXPECT_EQ(invoke({"sweep", "--points", "1"}).code, 2);
}

TEST(Sweep, WritesFileAndRejectsBadPath) {
  const auto path = std::filesystem::temp_directory_path() / "heisim_sweep_test.json";
  const Result r = invoke({"sweep", "--points", "3", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j["rows"].size(), 3u);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"sweep", "--out", "/nonexistent-dir/x.csv"}).code, 2);
}

TEST(Chsh, CanonicalZeroAndScan) {
  const Result canon = invoke({"chsh", "0", "pi/2", "pi/4", "3*pi/4", "--format", "json"});
  ASSERT_EQ(canon.code, 0) << canon.err;
  const json c = json::parse(canon.out);
  EXPECT_NEAR(c["S"].get<double>(), 2 * std::sqrt(2.0), 1e-9);
  EXPECT_TRUE(c["violation"].get<bool>());

  const json z = json::parse(invoke({"chsh", "0", "0", "0", "0", "--format", "json"}).out);
  EXPECT_NEAR(z["S"].get<double>(), 2.0, 1e-12);
  EXPECT_FALSE(z["violation"].get<bool>());

  const Result scan = invoke({"chsh", "--scan", "pi/4", "--format", "json"});
  ASSERT_EQ(scan.code, 0);
  EXPECT_NEAR(json::parse(scan.out)["max_abs_S"].get<double>(), 2 * std::sqrt(2.0), 1e-9);

  const Result negative = invoke({"chsh", "--format", "csv", "--", "0", "pi/2", "-pi/4", "pi/4"});
  EXPECT_EQ(negative.code, 0) << negative.err;

  EXPECT_EQ(invoke({"chsh"}).code, 2);
  EXPECT_EQ(invoke({"chsh", "0", "0", "0"}).code, 2);
  EXPECT_EQ(invoke({"chsh", "--scan", "0.7"}).code, 2);
  EXPECT_EQ(invoke({"chsh", "0", "0", "0", "0", "--scan", "pi/4"}).code, 2);
}

TEST(PictureCheck, PassesAndIsDeterministic) {
  const Result a = invoke({"picture-check", "--qubits", "4", "--depth", "8", "--seed", "42"});
  const Result b = invoke({"picture-check", "--qubits", "4", "--depth", "8", "--seed", "42"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("PASS"), std::string::npos);
  const json j = json::parse(invoke({"picture-check", "--qubits", "4", "--depth", "8", "--seed", "42", "--format", "json"}).out);
  EXPECT_LE(j["max_deviation"].get<double>(), 1e-10);
  EXPECT_EQ(invoke({"picture-check", "--qubits", "6"}).code, 2);
  EXPECT_EQ(invoke({"picture-check", "--qubits", "1"}).code, 2);
  EXPECT_EQ(invoke({"picture-check", "--depth", "13"}).code, 2);
}

TEST(Determinism, RepeatRunsAreByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--json"}, {"sweep", "--points", "7", "--format", "json"},
        {"epr", "--theta", "0.1", "--phi", "2", "--show-descriptors"}, {"chsh", "--scan", "pi/4", "--format", "csv"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

}  // namespace
}  // namespace heisim::cli
