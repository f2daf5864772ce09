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

#include "heisim/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "heisim/bell.hpp"
#include "heisim/epr.hpp"
#include "heisim/picture_check.hpp"
#include "heisim/state_vector.hpp"

namespace heisim {

namespace {

using epr::ExperimentConfig;

constexpr double kTight = 1e-12;

CheckResult finish(std::string name, double worst, double tolerance, std::string detail = {}) {
  return {std::move(name), worst <= tolerance, worst, tolerance, std::move(detail)};
}

CheckResult check_cnot_action(const Gate::Matrix& matrix) {
  try {
    const Gate cn = Gate::custom("CN", {0, 1}, matrix);
    const int ket01[] = {0, 1};
    const StateVector out = apply_gate(StateVector::basis_state(ket01), cn);
    const Complex expected[] = {1.0, 0.0, 0.0, 0.0};
    double worst = 0.0;
    bool exact = true;
    for (std::size_t k = 0; k < 4; ++k) {
      worst = std::max(worst, std::abs(out.amplitude(k) - expected[k]));
      exact = exact && out.amplitude(k) == expected[k];
    }
    CheckResult r = finish("eq5_cnot_action", worst, 0.0, "CN|0,1> must equal |1,1> exactly");
    r.passed = exact;
    return r;
  } catch (const std::exception& e) {
    return {"eq5_cnot_action", false, 1.0, 0.0, e.what()};
  }
}

CheckResult check_bell_state() {
  StateVector s = StateVector::all_zeros(2);
  s.apply(Gate::hadamard(1));
  s.apply(Gate::cnot(0, 1));
  const double r = std::numbers::sqrt2 / 2;
  const Complex expected[] = {r, 0.0, 0.0, -r};
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(s.amplitude(k) - expected[k]));
  return finish("bell_state_t1", worst, kTight, "(|1,1> - |0,0>)/sqrt(2) after H then CN");
}

CheckResult check_descriptors(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  std::size_t max_terms = 0;
  for (int k = 0; k < 25; ++k) {
    const double theta = angle(rng), phi = angle(rng);
    const auto [q2, q3] = epr::descriptors_at_t2({theta, phi});
    worst = std::max({worst, q2.max_deviation(epr::closed_form::q_z2_t2(theta)),
                      q3.max_deviation(epr::closed_form::q_z3_t2(phi))});
    max_terms = std::max({max_terms, q2.size(), q3.size()});
  }
  CheckResult r = finish("descriptors_t2", worst, kTight, "25 seeded angle pairs, two-term sums");
  r.passed = r.passed && max_terms <= 2;
  return r;
}

CheckResult check_grid(const std::vector<epr::ExperimentReport>& rows, const char* name, const char* quantity,
                       double tolerance, const char* detail) {
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.quantity(quantity).closed_form_deviation());
  return finish(name, worst, tolerance, detail);
}

CheckResult check_joint_probability(const std::vector<epr::ExperimentReport>& rows) {
  CheckResult r = check_grid(rows, "joint_probability_t2", "p_joint_t2", epr::kTolerance,
                             "P(Q2=1,Q3=1) at t=2 vs cos^2((theta-phi)/2)/2; 1/2 at theta=phi");
  const epr::JointProbability equal = epr::joint_prob_both_one_at_t2({0.3, 0.3});
  const double at_equal = std::max(std::abs(equal.heisenberg - 0.5), std::abs(equal.schrodinger - 0.5));
  r.max_deviation = std::max(r.max_deviation, at_equal);
  r.passed = r.max_deviation <= r.tolerance;
  return r;
}

CheckResult check_sign_audit() {
  const auto grid = epr::default_grid();
  const epr::AuditReport audit = epr::sign_error_audit(grid);
  CheckResult r = finish("sign_audit_t4", audit.max_deviation[0], epr::kTolerance,
                         "sin^2((theta-phi)/2) matches; rival forms miss by >= 0.4");
  const double third = std::numbers::pi / 3, quarter = std::numbers::pi / 4;
  const double cos_miss =
      std::abs(epr::prob_outcomes_differ_at_t4({third, 0.0}).schrodinger - epr::closed_form::cos2_half_difference(third, 0.0));
  const double sum_miss = std::abs(epr::prob_outcomes_differ_at_t4({quarter, quarter}).schrodinger -
                                   epr::closed_form::sin2_half_sum(quarter, quarter));
  r.passed = r.passed && cos_miss >= 0.4 && sum_miss >= 0.4 && audit.matching.size() == 1 &&
             audit.matching.front() == epr::Candidate::Sin2HalfDifference;
  return r;
}

CheckResult check_picture_equivalence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t width = 2 + static_cast<std::size_t>(k % 4);
    const std::size_t depth = 1 + rng() % 12;
    const auto gates = random_circuit(width, depth, rng());
    worst = std::max(worst, compare_pictures(width, gates).max_deviation);
  }
  return finish("picture_equivalence", worst, epr::kTolerance, "200 random circuits, widths 2-5, depth <= 12");
}

CheckResult check_chsh() {
  const double q = std::numbers::pi / 4;
  const bell::ChshResult r = bell::chsh({0.0, 2 * q, q, 3 * q});
  CheckResult out = finish("chsh_violation_t2", std::abs(std::abs(r.s) - 2 * std::numbers::sqrt2), 1e-6,
                           "canonical pi/4 setting at t=2 reaches 2 sqrt(2)");
  out.passed = out.passed && r.violation && std::abs(r.s) > 2.0;
  return out;
}

CheckResult check_no_signaling() {
  const double theta = std::numbers::pi / 5;
  double lo = 1.0, hi = 0.0;
  for (int k = 0; k <= 24; ++k) {
    const epr::Marginal m = epr::record_marginal_t3({theta, k * std::numbers::pi / 12});
    lo = std::min({lo, m.heisenberg, m.schrodinger});
    hi = std::max({hi, m.heisenberg, m.schrodinger});
  }
  return finish("no_signaling_t3", hi - lo, epr::kTolerance, "P(Q1=1) at t=3 as phi sweeps, theta fixed");
}

CheckResult check_locality() {
  std::size_t checked = 0;
  std::string failures;
  for (const auto& cfg : epr::default_grid()) {
    DescriptorSet ds = DescriptorSet::initial(epr::kWidth);
    for (const auto& g : epr::build_timeline(cfg).all_gates()) {
      const DescriptorSet next = evolve(ds, g);
      const InvarianceReport r = untouched_invariance_check(ds, next, g);
      checked += r.checked.size();
      for (const auto& v : r.violations) failures += v + " at " + g.label() + "; ";
      ds = next;
    }
  }
  CheckResult out = finish("descriptor_locality", failures.empty() ? 0.0 : 1.0, 0.0,
                           failures.empty() ? std::to_string(checked) + " untouched descriptors unchanged" : failures);
  out.passed = failures.empty() && checked > 0;
  return out;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const auto grid = epr::default_grid();
  const epr::SweepSummary sweep = epr::sweep(grid);

  std::vector<CheckResult> results;
  results.push_back(check_cnot_action(options.cnot_matrix));
  results.push_back(check_bell_state());
  results.push_back(check_descriptors(options.seed));
  results.push_back(check_grid(sweep.rows, "correlation_t2", "corr_t2", epr::kTolerance,
                               "<q_z2(2) q_z3(2)> = cos(theta-phi) in both engines"));
  results.push_back(check_joint_probability(sweep.rows));
  {
    double worst = 0.0;
    for (const auto& row : sweep.rows) {
      for (const char* name : {"linear_q_z2_t2", "linear_q_z3_t2"}) {
        const auto& q = row.quantity(name);
        worst = std::max({worst, std::abs(q.heisenberg), std::abs(q.schrodinger)});
      }
    }
    results.push_back(finish("linear_terms_vanish", worst, kTight, "<q_z2(2)> and <q_z3(2)> over the grid"));
  }
  results.push_back(check_sign_audit());
  results.push_back(check_picture_equivalence(options.seed));
  results.push_back(check_chsh());
  results.push_back(check_no_signaling());
  results.push_back(check_locality());
  return results;
}

}  // namespace heisim
