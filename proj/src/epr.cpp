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

#include "heisim/epr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heisim::epr {

namespace {

void check_config(const ExperimentConfig& cfg) {
  if (!std::isfinite(cfg.theta) || !std::isfinite(cfg.phi)) {
    throw std::invalid_argument("analyzer angles must be finite");
  }
}

OperatorSum z_on(std::size_t qubit) { return OperatorSum(PauliString::single(kWidth, qubit, PauliAxis::Z)); }

double square(double x) { return x * x; }

}  // namespace

Timeline::Timeline(std::vector<TimelineStep> steps) : steps_(std::move(steps)) {
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k].t != static_cast<int>(k) + 1) throw std::invalid_argument("timeline steps must be 1..n in order");
  }
}

const TimelineStep& Timeline::step(int t) const {
  if (t < 1 || t > static_cast<int>(steps_.size())) throw std::out_of_range("no such timeline step");
  return steps_[static_cast<std::size_t>(t - 1)];
}

std::vector<Gate> Timeline::gates_through(int t) const {
  std::vector<Gate> gates;
  for (const auto& s : steps_) {
    if (s.t > t) break;
    gates.insert(gates.end(), s.gates.begin(), s.gates.end());
  }
  return gates;
}

Timeline build_timeline(const ExperimentConfig& cfg) {
  check_config(cfg);
  return Timeline({
      {1, "inverse Bell gate", {Gate::hadamard(kQ3), Gate::cnot(kQ2, kQ3)}},
      {2, "analyzer rotations", {Gate::analyzer(kQ2, cfg.theta), Gate::analyzer(kQ3, cfg.phi)}},
      {3, "record onto ancillas", {Gate::cnot(kQ1, kQ2), Gate::cnot(kQ4, kQ3)}},
      {4, "local comparison", {Gate::cnot(kQ1, kQ4)}},
  });
}

namespace closed_form {

double joint_both_one(double theta, double phi) { return 0.5 * square(std::cos((theta - phi) / 2)); }
double correlation(double theta, double phi) { return std::cos(theta - phi); }
double outcomes_differ(double theta, double phi) { return square(std::sin((theta - phi) / 2)); }
double cos2_half_difference(double theta, double phi) { return square(std::cos((theta - phi) / 2)); }
double sin2_half_sum(double theta, double phi) { return square(std::sin((theta + phi) / 2)); }

OperatorSum q_z2_t2(double theta) {
  return OperatorSum(PauliString::parse("IYXI"), std::sin(theta)) +
         OperatorSum(PauliString::parse("IZXI"), -std::cos(theta));
}

OperatorSum q_z3_t2(double phi) {
  return OperatorSum(PauliString::parse("IIXI"), std::cos(phi)) +
         OperatorSum(PauliString::parse("IXYI"), std::sin(phi));
}

}  // namespace closed_form

Evolution run(const ExperimentConfig& cfg) {
  const Timeline timeline = build_timeline(cfg);
  Evolution ev;
  ev.descriptors.push_back(DescriptorSet::initial(kWidth));
  ev.states.push_back(StateVector::all_zeros(kWidth));
  for (const auto& step : timeline.steps()) {
    DescriptorSet ds = ev.descriptors.back();
    StateVector psi = ev.states.back();
    for (const auto& g : step.gates) {
      ds = evolve(ds, g);
      psi.apply(g);
    }
    ev.descriptors.push_back(std::move(ds));
    ev.states.push_back(std::move(psi));
  }
  return ev;
}

DescriptorPair descriptors_at_t2(const ExperimentConfig& cfg) {
  const Timeline timeline = build_timeline(cfg);
  const DescriptorSet ds = evolve_all(DescriptorSet::initial(kWidth), timeline.gates_through(2));
  return {ds.z(kQ2), ds.z(kQ3)};
}

namespace {

JointProbability joint_from(const Evolution& ev, const ExperimentConfig& cfg) {
  const DescriptorSet& ds = ev.descriptors[2];
  const OperatorSum corr = ds.z(kQ2) * ds.z(kQ3);
  JointProbability out{};
  out.linear_q_z2 = descriptor_expectation(ds, ds.z(kQ2));
  out.linear_q_z3 = descriptor_expectation(ds, ds.z(kQ3));
  out.correlation = descriptor_expectation(ds, corr);
  out.heisenberg = 0.25 + 0.25 * (out.linear_q_z2 + out.linear_q_z3 + out.correlation);
  const QubitValue both_one[] = {{kQ2, 1}, {kQ3, 1}};
  out.schrodinger = joint_probability(ev.states[2], both_one);
  out.closed_form = closed_form::joint_both_one(cfg.theta, cfg.phi);
  return out;
}

double ancilla_correlation_t3(const Evolution& ev) {
  const DescriptorSet& ds = ev.descriptors[3];
  return descriptor_expectation(ds, ds.z(kQ1) * ds.z(kQ4));
}

DifferProbability differ_from(const Evolution& ev, const ExperimentConfig& cfg) {
  DifferProbability out{};
  out.heisenberg = 0.5 - 0.5 * ancilla_correlation_t3(ev);
  const QubitValue q1_one[] = {{kQ1, 1}};
  out.schrodinger = joint_probability(ev.states[4], q1_one);
  out.closed_form = closed_form::outcomes_differ(cfg.theta, cfg.phi);
  return out;
}

Marginal marginal_from(const Evolution& ev) {
  const DescriptorSet& ds = ev.descriptors[3];
  const QubitValue q1_one[] = {{kQ1, 1}};
  return {0.5 + 0.5 * descriptor_expectation(ds, ds.z(kQ1)), joint_probability(ev.states[3], q1_one)};
}

}  // namespace

JointProbability joint_prob_both_one_at_t2(const ExperimentConfig& cfg) { return joint_from(run(cfg), cfg); }

DifferProbability prob_outcomes_differ_at_t4(const ExperimentConfig& cfg) { return differ_from(run(cfg), cfg); }

Marginal record_marginal_t3(const ExperimentConfig& cfg) { return marginal_from(run(cfg)); }

double Quantity::engine_delta() const { return std::abs(heisenberg - schrodinger); }

double Quantity::closed_form_deviation() const {
  return std::max(std::abs(heisenberg - closed_form), std::abs(schrodinger - closed_form));
}

const Quantity& ExperimentReport::quantity(std::string_view name) const {
  for (const auto& q : quantities) {
    if (q.name == name) return q;
  }
  throw std::out_of_range("no quantity named " + std::string(name));
}

double ExperimentReport::max_engine_delta() const {
  double worst = 0.0;
  for (const auto& q : quantities) worst = std::max(worst, q.engine_delta());
  return worst;
}

double ExperimentReport::max_closed_form_deviation() const {
  double worst = 0.0;
  for (const auto& q : quantities) worst = std::max(worst, q.closed_form_deviation());
  return worst;
}

bool ExperimentReport::consistent(double tolerance) const {
  return max_engine_delta() <= tolerance && max_closed_form_deviation() <= tolerance;
}

ExperimentReport pre_vs_post_report(const ExperimentConfig& cfg) {
  const Evolution ev = run(cfg);
  const double diff_corr = closed_form::correlation(cfg.theta, cfg.phi);
  ExperimentReport report{};
  report.theta = cfg.theta;
  report.phi = cfg.phi;

  {
    const DescriptorSet& ds = ev.descriptors[1];
    const QubitValue both_one[] = {{kQ2, 1}, {kQ3, 1}};
    const OperatorSum q2 = ds.z(kQ2), q3 = ds.z(kQ3);
    const double corr = descriptor_expectation(ds, q2 * q3);
    report.quantities.push_back({"corr_z2z3_t1", 1, 1.0, corr, expectation(ev.states[1], z_on(kQ2) * z_on(kQ3))});
    report.quantities.push_back({"p_joint_t1", 1, 0.5,
                                 0.25 + 0.25 * (descriptor_expectation(ds, q2) + descriptor_expectation(ds, q3) + corr),
                                 joint_probability(ev.states[1], both_one)});
  }

  const JointProbability joint = joint_from(ev, cfg);
  report.quantities.push_back(
      {"linear_q_z2_t2", 2, 0.0, joint.linear_q_z2, expectation(ev.states[2], z_on(kQ2))});
  report.quantities.push_back(
      {"linear_q_z3_t2", 2, 0.0, joint.linear_q_z3, expectation(ev.states[2], z_on(kQ3))});
  report.quantities.push_back(
      {"corr_t2", 2, diff_corr, joint.correlation, expectation(ev.states[2], z_on(kQ2) * z_on(kQ3))});
  report.quantities.push_back({"p_joint_t2", 2, joint.closed_form, joint.heisenberg, joint.schrodinger});

  const Marginal marginal = marginal_from(ev);
  report.quantities.push_back({"p_record_q1_t3", 3, 0.5, marginal.heisenberg, marginal.schrodinger});
  report.quantities.push_back({"corr_ancillas_t3", 3, diff_corr, ancilla_correlation_t3(ev),
                               expectation(ev.states[3], z_on(kQ1) * z_on(kQ4))});

  const DifferProbability differ = differ_from(ev, cfg);
  report.quantities.push_back({"p_diff_t4", 4, differ.closed_form, differ.heisenberg, differ.schrodinger});
  {
    // Direct readout of the comparison qubit: z1(4) = (1 + q_z1(4)) / 2.
    const DescriptorSet& ds = ev.descriptors[4];
    report.quantities.push_back({"p_q1_one_t4", 4, differ.closed_form,
                                 0.5 + 0.5 * descriptor_expectation(ds, ds.z(kQ1)),
                                 expectation(ev.states[4], projector(kWidth, std::array{QubitValue{kQ1, 1}}))});
  }

  report.p_joint_t2 = joint.heisenberg;
  report.corr_t2 = joint.correlation;
  report.p_diff_t4 = differ.heisenberg;
  report.candidates = {
      std::abs(differ.heisenberg - closed_form::outcomes_differ(cfg.theta, cfg.phi)),
      std::abs(differ.heisenberg - closed_form::cos2_half_difference(cfg.theta, cfg.phi)),
      std::abs(differ.heisenberg - closed_form::sin2_half_sum(cfg.theta, cfg.phi)),
  };
  return report;
}

std::vector<ExperimentConfig> default_grid() {
  std::vector<ExperimentConfig> grid;
  const double phi = std::numbers::pi / 4;
  for (int k = 0; k <= 24; ++k) grid.push_back({phi + k * std::numbers::pi / 12, phi});
  return grid;
}

SweepSummary sweep(std::span<const ExperimentConfig> grid) {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  SweepSummary summary{};
  summary.p_joint_t2_min = 1.0;
  summary.p_joint_t2_max = 0.0;
  for (const auto& cfg : grid) {
    summary.rows.push_back(pre_vs_post_report(cfg));
    summary.p_joint_t2_min = std::min(summary.p_joint_t2_min, summary.rows.back().p_joint_t2);
    summary.p_joint_t2_max = std::max(summary.p_joint_t2_max, summary.rows.back().p_joint_t2);
  }
  summary.t2_depends_on_angles = summary.p_joint_t2_max - summary.p_joint_t2_min > kTolerance;
  return summary;
}

const char* candidate_name(Candidate c) {
  switch (c) {
    case Candidate::Sin2HalfDifference: return "sin2_half_difference";
    case Candidate::Cos2HalfDifference: return "cos2_half_difference";
    case Candidate::Sin2HalfSum: return "sin2_half_sum";
  }
  return "unknown";
}

AuditReport sign_error_audit(std::span<const ExperimentConfig> grid) {
  if (grid.empty()) throw std::invalid_argument("audit grid is empty");
  AuditReport report{};
  std::array<std::array<bool, kCandidateCount>, kCandidateCount> ever_separated{};
  for (const auto& cfg : grid) {
    AuditPoint p{};
    p.theta = cfg.theta;
    p.phi = cfg.phi;
    p.simulated = prob_outcomes_differ_at_t4(cfg).schrodinger;
    p.candidate_values = {closed_form::outcomes_differ(cfg.theta, cfg.phi),
                          closed_form::cos2_half_difference(cfg.theta, cfg.phi),
                          closed_form::sin2_half_sum(cfg.theta, cfg.phi)};
    p.fully_discriminating = true;
    for (std::size_t i = 0; i < kCandidateCount; ++i) {
      p.deviations[i] = std::abs(p.simulated - p.candidate_values[i]);
      for (std::size_t j = 0; j < kCandidateCount; ++j) {
        p.separated[i][j] = std::abs(p.candidate_values[i] - p.candidate_values[j]) > kTolerance;
        ever_separated[i][j] = ever_separated[i][j] || p.separated[i][j];
        if (i != j && !p.separated[i][j]) p.fully_discriminating = false;
      }
    }
    report.points.push_back(p);
  }
  for (std::size_t i = 0; i < kCandidateCount; ++i) {
    for (std::size_t j = i + 1; j < kCandidateCount; ++j) {
      if (!ever_separated[i][j]) {
        throw std::invalid_argument(std::string("audit grid cannot tell ") + candidate_name(Candidate(i)) +
                                    " from " + candidate_name(Candidate(j)));
      }
    }
  }
  for (std::size_t i = 0; i < kCandidateCount; ++i) {
    double worst = 0.0;
    for (const auto& p : report.points) worst = std::max(worst, p.deviations[i]);
    report.max_deviation[i] = worst;
    if (worst <= kTolerance) report.matching.push_back(Candidate(i));
  }
  return report;
}

}  // namespace heisim::epr
