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

#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "heisim/bell.hpp"
#include "heisim/epr.hpp"
#include "heisim/picture_check.hpp"
#include "heisim/report_io.hpp"
#include "heisim/verification.hpp"

namespace heisim::cli {

namespace {

// Thrown for bad values found after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const double v = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

double angle_or_throw(const std::string& text, bool degrees, const char* what) {
  const auto v = parse_angle(text, degrees);
  if (!v) throw UsageError(std::string("invalid angle for ") + what + ": '" + text + "'");
  return *v;
}

// --out goes to a file, otherwise to the output stream.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file.flush()) throw UsageError("cannot write output file '" + path + "'");
}

const std::map<std::string, std::string> kFormats{{"table", "table"}, {"json", "json"}, {"csv", "csv"}};

}  // namespace

std::optional<double> parse_angle(const std::string& text, bool degrees) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (std::size_t pos; (pos = s.find("\xcf\x80")) != std::string::npos;) s.replace(pos, 2, "pi");

  double sign = 1.0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    sign = s[0] == '-' ? -1.0 : 1.0;
    s.erase(0, 1);
  }
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) return std::nullopt;

  std::optional<double> value;
  const std::size_t pi = s.find("pi");
  if (pi == std::string::npos) {
    value = parse_number(s);
  } else {
    std::string head = s.substr(0, pi), tail = s.substr(pi + 2);
    double factor = 1.0, divisor = 1.0;
    if (!head.empty()) {
      if (head.back() == '*') head.pop_back();
      const auto f = parse_number(head);
      if (!f) return std::nullopt;
      factor = *f;
    }
    if (!tail.empty()) {
      if (tail[0] != '/') return std::nullopt;
      const auto d = parse_number(tail.substr(1));
      if (!d || *d == 0.0) return std::nullopt;
      divisor = *d;
    }
    value = factor * std::numbers::pi / divisor;
  }
  if (!value || !std::isfinite(*value)) return std::nullopt;
  const double radians = sign * *value * (degrees ? std::numbers::pi / 180.0 : 1.0);
  return std::isfinite(radians) ? std::optional<double>(radians) : std::nullopt;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-picture qubit simulator for the EPR-Bohm experiment with ancilla records.", "heisim"};
  app.require_subcommand(1, 1);

  // verify
  bool verify_json = false;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run every end-to-end check; exit 1 if any fails");
  verify->add_flag("--json", verify_json, "Machine-readable results");
  verify->add_option("--out", verify_out, "Write to this file instead of stdout");

  // epr
  std::string epr_theta, epr_phi, epr_format = "table", epr_out;
  bool epr_degrees = false, epr_descriptors = false;
  auto* epr_cmd = app.add_subcommand("epr", "Report every quantity of the experiment at one angle pair");
  epr_cmd->add_option("--theta", epr_theta, "Analyzer angle on Q2 (radians; accepts pi forms)")->required();
  epr_cmd->add_option("--phi", epr_phi, "Analyzer angle on Q3")->required();
  epr_cmd->add_flag("--degrees", epr_degrees, "Read angles in degrees");
  epr_cmd->add_flag("--show-descriptors", epr_descriptors, "Include q_z2 and q_z3 at t=2");
  epr_cmd->add_option("--format", epr_format, "table, json or csv")->transform(CLI::IsMember(kFormats));
  epr_cmd->add_option("--out", epr_out, "Write to this file instead of stdout");

  // sweep
  int sweep_points = 25;
  std::string sweep_format = "csv", sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the experiment over theta - phi in [0, 2 pi) with phi = 0");
  sweep_cmd->add_option("--points", sweep_points, "Number of grid points (>= 2)")->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->transform(CLI::IsMember(std::map<std::string, std::string>{{"json", "json"}, {"csv", "csv"}}));
  sweep_cmd->add_option("--out", sweep_out, "Write to this file instead of stdout");

  // chsh
  std::vector<std::string> chsh_angles;
  std::string chsh_scan_step, chsh_format = "table", chsh_out;
  bool chsh_degrees = false;
  auto* chsh_cmd = app.add_subcommand("chsh", "CHSH value for four angles a a' b b', or a grid scan");
  chsh_cmd->add_option("angles", chsh_angles, "a a' b b' (use -- before negative values)")->expected(4);
  chsh_cmd->add_option("--scan", chsh_scan_step, "Scan all settings on a grid with this step (must divide pi)");
  chsh_cmd->add_flag("--degrees", chsh_degrees, "Read angles in degrees");
  chsh_cmd->add_option("--format", chsh_format, "table, json or csv")->transform(CLI::IsMember(kFormats));
  chsh_cmd->add_option("--out", chsh_out, "Write to this file instead of stdout");

  // picture-check
  int pc_qubits = 4, pc_depth = 8;
  std::uint64_t pc_seed = 42;
  std::string pc_format = "table", pc_out;
  auto* pc_cmd = app.add_subcommand("picture-check", "Compare both engines on a seeded random circuit");
  pc_cmd->add_option("--qubits", pc_qubits, "Circuit width, 2 to 5")->check(CLI::Range(2, 5));
  pc_cmd->add_option("--depth", pc_depth, "Number of gates, 1 to 12")->check(CLI::Range(1, 12));
  pc_cmd->add_option("--seed", pc_seed, "Generator seed");
  pc_cmd->add_option("--format", pc_format, "table or json")
      ->transform(CLI::IsMember(std::map<std::string, std::string>{{"table", "table"}, {"json", "json"}}));
  pc_cmd->add_option("--out", pc_out, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const auto results = run_verification();
      emit(verify_json ? io::verification_json(results) : io::verification_table(results), verify_out, out);
      for (const auto& r : results) {
        if (!r.passed) return kExitCheckFailed;
      }
      return kExitOk;
    }

    if (epr_cmd->parsed()) {
      const epr::ExperimentConfig cfg{angle_or_throw(epr_theta, epr_degrees, "--theta"),
                                      angle_or_throw(epr_phi, epr_degrees, "--phi")};
      const epr::ExperimentReport report = epr::pre_vs_post_report(cfg);
      std::optional<epr::DescriptorPair> descriptors;
      if (epr_descriptors) descriptors = epr::descriptors_at_t2(cfg);
      const epr::DescriptorPair* d = descriptors ? &*descriptors : nullptr;
      if (epr_format == "json") {
        emit(io::experiment_json(report, d), epr_out, out);
      } else if (epr_format == "csv") {
        if (d) throw UsageError("--show-descriptors is not available with --format csv");
        emit(io::experiments_csv({&report, 1}), epr_out, out);
      } else {
        emit(io::experiment_table(report, d), epr_out, out);
      }
      return report.consistent() ? kExitOk : kExitCheckFailed;
    }

    if (sweep_cmd->parsed()) {
      std::vector<epr::ExperimentConfig> grid;
      for (int k = 0; k < sweep_points; ++k) grid.push_back({2 * std::numbers::pi * k / sweep_points, 0.0});
      const epr::SweepSummary summary = epr::sweep(grid);
      emit(sweep_format == "json" ? io::experiments_json(summary.rows) : io::experiments_csv(summary.rows), sweep_out,
           out);
      for (const auto& row : summary.rows) {
        if (!row.consistent()) return kExitCheckFailed;
      }
      return kExitOk;
    }

    if (chsh_cmd->parsed()) {
      const bool scanning = !chsh_scan_step.empty();
      if (scanning == !chsh_angles.empty()) throw UsageError("chsh needs either four angles or --scan STEP");
      if (scanning) {
        const double step = angle_or_throw(chsh_scan_step, chsh_degrees, "--scan");
        const double ratio = std::numbers::pi / step;
        if (!(step > 0) || std::abs(ratio - std::round(ratio)) > 1e-9) throw UsageError("--scan step must divide pi");
        const bell::ChshScan scan = bell::chsh_scan(step, chsh_format == "csv");
        if (chsh_format == "json") emit(io::chsh_scan_json(scan), chsh_out, out);
        else if (chsh_format == "csv") emit(io::chsh_csv(scan.cells), chsh_out, out);
        else emit(io::chsh_scan_table(scan), chsh_out, out);
        return kExitOk;
      }
      const bell::ChshResult r = bell::chsh({angle_or_throw(chsh_angles[0], chsh_degrees, "a"),
                                             angle_or_throw(chsh_angles[1], chsh_degrees, "a'"),
                                             angle_or_throw(chsh_angles[2], chsh_degrees, "b"),
                                             angle_or_throw(chsh_angles[3], chsh_degrees, "b'")});
      if (chsh_format == "json") emit(io::chsh_json(r), chsh_out, out);
      else if (chsh_format == "csv") emit(io::chsh_csv({&r, 1}), chsh_out, out);
      else emit(io::chsh_table(r), chsh_out, out);
      return kExitOk;
    }

    if (pc_cmd->parsed()) {
      const auto width = static_cast<std::size_t>(pc_qubits);
      const auto gates = random_circuit(width, static_cast<std::size_t>(pc_depth), pc_seed);
      const PictureCheckReport report = compare_pictures(width, gates);
      emit(pc_format == "json" ? io::picture_check_json(report, pc_seed, epr::kTolerance)
                               : io::picture_check_table(report, pc_seed, epr::kTolerance),
           pc_out, out);
      return report.max_deviation <= epr::kTolerance ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace heisim::cli
