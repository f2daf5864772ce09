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
#include <numbers>
#include <sstream>

#include "heisim/report_io.hpp"
#include "json.hpp"

namespace heisim::io {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

bool ascii_only(const std::string& s) {
  for (unsigned char c : s) {
    if (c > 127) return false;
  }
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

TEST(Round12, KeepsTwelveDigits) {
  EXPECT_EQ(round12(kPi), 3.14159265359);
  EXPECT_EQ(round12(-0.0), 0.0);
  EXPECT_FALSE(std::signbit(round12(-0.0)));
  EXPECT_EQ(round12(1.0 / 3), 0.333333333333);
  EXPECT_LE(std::abs(round12(0.123456789012345) - 0.123456789012345), 1e-12);
}

TEST(ExperimentJson, FlatKeysAndValues) {
  const epr::ExperimentReport r = epr::pre_vs_post_report({kPi / 3, 0.0});
  const auto d = epr::descriptors_at_t2({kPi / 3, 0.0});
  const std::string text = experiment_json(r, &d);
  EXPECT_TRUE(ascii_only(text));
  const json j = json::parse(text);
  for (const char* key : experiment_columns()) EXPECT_TRUE(j.contains(key)) << key;
  // Oracles: cos^2(pi/6)/2, cos(pi/3), sin^2(pi/6).
  EXPECT_NEAR(j["p_joint_t2"].get<double>(), 0.375, 1e-12);
  EXPECT_NEAR(j["corr_t2"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["p_diff_t4"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["dev_cos2_diff"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(j["quantities"].size(), r.quantities.size());
  EXPECT_TRUE(j["consistent"].get<bool>());
  const std::string q2 = j["descriptors"]["q_z2_t2"];
  EXPECT_NE(q2.find("+0.866025 * Y2 X3"), std::string::npos);
}

TEST(ExperimentJson, NoDescriptorsUnlessAsked) {
  const json j = json::parse(experiment_json(epr::pre_vs_post_report({0.1, 0.2})));
  EXPECT_FALSE(j.contains("descriptors"));
}

TEST(ExperimentsCsv, HeaderAndRows) {
  std::vector<epr::ExperimentReport> rows;
  for (int k = 0; k < 4; ++k) rows.push_back(epr::pre_vs_post_report({k * kPi / 2, 0.0}));
  const std::string csv = experiments_csv(rows);
  EXPECT_TRUE(ascii_only(csv));
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  const auto lines = split(csv, '\n');
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "theta,phi,p_joint_t2,corr_t2,p_diff_t4,dev_sin2_diff,dev_cos2_diff,dev_sin2_sum,"
                      "delta_p_joint_t2,delta_corr_t2,delta_p_diff_t4");
  for (int k = 0; k < 4; ++k) {
    const auto cells = split(lines[k + 1], ',');
    ASSERT_EQ(cells.size(), 11u);
    const double diff = k * kPi / 2;
    EXPECT_NEAR(std::stod(cells[2]), 0.5 * std::pow(std::cos(diff / 2), 2), 1e-10);
    EXPECT_NEAR(std::stod(cells[4]), std::pow(std::sin(diff / 2), 2), 1e-10);
  }
  const json j = json::parse(experiments_json(rows));
  EXPECT_EQ(j["points"], 4);
  EXPECT_EQ(j["rows"].size(), 4u);
}

TEST(ChshOutput, CsvAndJson) {
  const bell::ChshResult r = bell::chsh({0.0, kPi / 2, kPi / 4, 3 * kPi / 4});
  const auto lines = split(chsh_csv({&r, 1}), '\n');
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "a,a_prime,b,b_prime,S,violation");
  const auto cells = split(lines[1], ',');
  EXPECT_NEAR(std::stod(cells[4]), 2 * std::sqrt(2.0), 1e-10);
  EXPECT_EQ(cells[5], "true");
  const json j = json::parse(chsh_json(r));
  EXPECT_TRUE(j["violation"].get<bool>());
  EXPECT_EQ(j["E"].size(), 4u);
  const json s = json::parse(chsh_scan_json(bell::chsh_scan(kPi / 4)));
  EXPECT_NEAR(s["max_abs_S"].get<double>(), 2 * std::sqrt(2.0), 1e-9);
  EXPECT_EQ(s["settings"], 4096);
}

TEST(VerificationOutput, ListsFailures) {
  const std::vector<CheckResult> results = {{"a_check", true, 0.0, 1e-10, "ok"}, {"b_check", false, 0.5, 1e-10, "bad"}};
  const json j = json::parse(verification_json(results));
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["failed"], json::array({"b_check"}));
  const std::string table = verification_table(results);
  EXPECT_NE(table.find("FAIL   b_check"), std::string::npos);
  EXPECT_NE(table.find("1/2 checks passed"), std::string::npos);
}

TEST(PictureCheckOutput, Json) {
  const auto gates = random_circuit(3, 5, 1);
  const PictureCheckReport r = compare_pictures(3, gates);
  const json j = json::parse(picture_check_json(r, 1, 1e-10));
  EXPECT_EQ(j["gates"].size(), 5u);
  EXPECT_EQ(j["final"].size(), 6u);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Tables, SixDigits) {
  const std::string t = experiment_table(epr::pre_vs_post_report({kPi / 3, 0.0}));
  EXPECT_NE(t.find("0.375000"), std::string::npos);
  EXPECT_EQ(t.find("-0.000000"), std::string::npos);
  EXPECT_TRUE(ascii_only(t));
}

}  // namespace
}  // namespace heisim::io
