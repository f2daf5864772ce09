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

#include "heisim/report_io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace heisim::io {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kExperimentColumns[] = {
    "theta",         "phi",           "p_joint_t2",       "corr_t2",       "p_diff_t4",      "dev_sin2_diff",
    "dev_cos2_diff", "dev_sin2_sum",  "delta_p_joint_t2", "delta_corr_t2", "delta_p_diff_t4",
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v == 0.0 ? 0.0 : v);
  std::string text = buf;
  // Tiny negative residues would otherwise print as "-0.000000".
  if (text[0] == '-' && text.substr(0, text.find_first_of("eE")).find_first_of("123456789") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string g12(double v) { return fmt("%.12g", v); }
std::string f6(double v) { return fmt("%.6f", v); }

std::string dump(const Json& j) { return j.dump(2, ' ', true) + "\n"; }

std::array<double, 11> experiment_values(const epr::ExperimentReport& r) {
  return {r.theta,
          r.phi,
          r.p_joint_t2,
          r.corr_t2,
          r.p_diff_t4,
          r.candidates.sin2_half_difference,
          r.candidates.cos2_half_difference,
          r.candidates.sin2_half_sum,
          r.quantity("p_joint_t2").engine_delta(),
          r.quantity("corr_t2").engine_delta(),
          r.quantity("p_diff_t4").engine_delta()};
}

Json flat(const epr::ExperimentReport& r) {
  Json j = Json::object();
  const auto values = experiment_values(r);
  for (std::size_t k = 0; k < values.size(); ++k) j[kExperimentColumns[k]] = round12(values[k]);
  return j;
}

Json chsh_object(const bell::ChshResult& r) {
  return Json{{"a", round12(r.setting.a)},
              {"a_prime", round12(r.setting.a_prime)},
              {"b", round12(r.setting.b)},
              {"b_prime", round12(r.setting.b_prime)},
              {"E", {round12(r.correlations[0]), round12(r.correlations[1]), round12(r.correlations[2]),
                     round12(r.correlations[3])}},
              {"S", round12(r.s)},
              {"violation", r.violation}};
}

}  // namespace

double round12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  return std::strtod(g12(v).c_str(), nullptr);
}

std::span<const char* const> experiment_columns() { return kExperimentColumns; }

std::string experiment_json(const epr::ExperimentReport& report, const epr::DescriptorPair* descriptors) {
  Json j = flat(report);
  Json quantities = Json::array();
  for (const auto& q : report.quantities) {
    quantities.push_back({{"name", q.name},
                          {"t", q.step},
                          {"pre_comparison", q.step <= 2},
                          {"closed_form", round12(q.closed_form)},
                          {"heisenberg", round12(q.heisenberg)},
                          {"schrodinger", round12(q.schrodinger)},
                          {"engine_delta", round12(q.engine_delta())}});
  }
  j["quantities"] = std::move(quantities);
  j["consistent"] = report.consistent();
  if (descriptors) {
    j["descriptors"] = {{"q_z2_t2", descriptors->q_z2.to_string()}, {"q_z3_t2", descriptors->q_z3.to_string()}};
  }
  return dump(j);
}

std::string experiment_table(const epr::ExperimentReport& report, const epr::DescriptorPair* descriptors) {
  std::string out = "theta = " + f6(report.theta) + "  phi = " + f6(report.phi) + "\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %2s  %12s %12s %12s %10s\n", "quantity", "t", "closed_form", "heisenberg",
                "schrodinger", "delta");
  out += line;
  for (const auto& q : report.quantities) {
    std::snprintf(line, sizeof line, "%-18s %2d  %12s %12s %12s %10s\n", q.name.c_str(), q.step,
                  f6(q.closed_form).c_str(), f6(q.heisenberg).c_str(), f6(q.schrodinger).c_str(),
                  fmt("%.1e", q.engine_delta()).c_str());
    out += line;
  }
  out += "\np_diff_t4 candidates: sin2_half_difference dev " + f6(report.candidates.sin2_half_difference) +
         ", cos2_half_difference dev " + f6(report.candidates.cos2_half_difference) + ", sin2_half_sum dev " +
         f6(report.candidates.sin2_half_sum) + "\n";
  out += std::string("consistent: ") + (report.consistent() ? "yes" : "NO") + "\n";
  if (descriptors) {
    out += "\nq_z2_t2 = " + descriptors->q_z2.to_string() + "\n";
    out += "q_z3_t2 = " + descriptors->q_z3.to_string() + "\n";
  }
  return out;
}

std::string experiments_csv(std::span<const epr::ExperimentReport> rows) {
  std::string out;
  for (std::size_t k = 0; k < std::size(kExperimentColumns); ++k) {
    out += (k ? "," : "");
    out += kExperimentColumns[k];
  }
  out += "\n";
  for (const auto& r : rows) {
    const auto values = experiment_values(r);
    for (std::size_t k = 0; k < values.size(); ++k) out += (k ? "," : "") + g12(values[k]);
    out += "\n";
  }
  return out;
}

std::string experiments_json(std::span<const epr::ExperimentReport> rows) {
  Json list = Json::array();
  for (const auto& r : rows) list.push_back(flat(r));
  return dump(Json{{"points", rows.size()}, {"rows", std::move(list)}});
}

std::string chsh_json(const bell::ChshResult& r) { return dump(chsh_object(r)); }

std::string chsh_csv(std::span<const bell::ChshResult> rows) {
  std::string out = "a,a_prime,b,b_prime,S,violation\n";
  for (const auto& r : rows) {
    out += g12(r.setting.a) + "," + g12(r.setting.a_prime) + "," + g12(r.setting.b) + "," + g12(r.setting.b_prime) +
           "," + g12(r.s) + "," + (r.violation ? "true" : "false") + "\n";
  }
  return out;
}

std::string chsh_table(const bell::ChshResult& r) {
  const auto& s = r.setting;
  std::string out = "a = " + f6(s.a) + "  a' = " + f6(s.a_prime) + "  b = " + f6(s.b) + "  b' = " + f6(s.b_prime) + "\n";
  const char* labels[] = {"E(a,b)  ", "E(a,b') ", "E(a',b) ", "E(a',b')"};
  for (int k = 0; k < 4; ++k) out += std::string(labels[k]) + " = " + f6(r.correlations[k]) + "\n";
  out += "S = " + f6(r.s) + "  violation = " + (r.violation ? "true" : "false") + "\n";
  return out;
}

std::string chsh_scan_json(const bell::ChshScan& scan) {
  return dump(Json{{"step", round12(scan.step)},
                   {"angles_per_axis", scan.angles_per_axis},
                   {"settings", scan.angles_per_axis * scan.angles_per_axis * scan.angles_per_axis *
                                    scan.angles_per_axis},
                   {"max_abs_S", round12(scan.max_abs_s)},
                   {"best", chsh_object(scan.best)}});
}

std::string chsh_scan_table(const bell::ChshScan& scan) {
  const std::size_t n = scan.angles_per_axis;
  return "scan step = " + f6(scan.step) + " (" + std::to_string(n) + " angles per axis, " +
         std::to_string(n * n * n * n) + " settings)\nmax |S| = " + f6(scan.max_abs_s) + "\nbest setting:\n" +
         chsh_table(scan.best);
}

std::string verification_json(std::span<const CheckResult> results) {
  Json checks = Json::array();
  Json failed = Json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"max_deviation", round12(r.max_deviation)},
                      {"tolerance", round12(r.tolerance)},
                      {"detail", r.detail}});
    if (!r.passed) failed.push_back(r.name);
  }
  return dump(Json{{"passed", failed.empty()}, {"failed", std::move(failed)}, {"checks", std::move(checks)}});
}

std::string verification_table(std::span<const CheckResult> results) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-24s %12s %10s  %s\n", "status", "check", "max_dev", "tolerance", "detail");
  out += line;
  std::size_t failures = 0;
  for (const auto& r : results) {
    failures += !r.passed;
    std::snprintf(line, sizeof line, "%-6s %-24s %12s %10s  ", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                  fmt("%.6g", r.max_deviation).c_str(), fmt("%.0e", r.tolerance).c_str());
    out += line + r.detail + "\n";
  }
  out += std::to_string(results.size() - failures) + "/" + std::to_string(results.size()) + " checks passed\n";
  for (const auto& r : results) {
    if (!r.passed) out += "failed: " + r.name + "\n";
  }
  return out;
}

std::string picture_check_json(const PictureCheckReport& report, std::uint64_t seed, double tolerance) {
  Json gates = Json::array();
  for (const auto& g : report.gates) gates.push_back(g.label());
  Json finals = Json::array();
  for (const auto& c : report.final_comparisons) {
    finals.push_back({{"observable", c.observable},
                      {"heisenberg", round12(c.heisenberg)},
                      {"schrodinger", round12(c.schrodinger)}});
  }
  return dump(Json{{"qubits", report.width},
                   {"depth", report.gates.size()},
                   {"seed", seed},
                   {"gates", std::move(gates)},
                   {"comparisons", report.comparisons},
                   {"max_deviation", round12(report.max_deviation)},
                   {"tolerance", round12(tolerance)},
                   {"passed", report.max_deviation <= tolerance},
                   {"final", std::move(finals)}});
}

std::string picture_check_table(const PictureCheckReport& report, std::uint64_t seed, double tolerance) {
  std::string out = "qubits = " + std::to_string(report.width) + "  depth = " + std::to_string(report.gates.size()) +
                    "  seed = " + std::to_string(seed) + "\ncircuit:";
  for (const auto& g : report.gates) out += " " + g.label();
  out += "\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %12s %12s\n", "observable", "heisenberg", "schrodinger");
  out += line;
  for (const auto& c : report.final_comparisons) {
    std::snprintf(line, sizeof line, "%-10s %12s %12s\n", c.observable.c_str(), f6(c.heisenberg).c_str(),
                  f6(c.schrodinger).c_str());
    out += line;
  }
  out += "\n" + std::to_string(report.comparisons) + " comparisons, max deviation " +
         fmt("%.3e", report.max_deviation) + " (tolerance " + fmt("%.0e", tolerance) + "): " +
         (report.max_deviation <= tolerance ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace heisim::io
