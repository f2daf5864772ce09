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

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "heisim/descriptors.hpp"
#include "heisim/gate.hpp"
#include "heisim/pauli.hpp"
#include "heisim/state_vector.hpp"

// The four-qubit EPR-Bohm circuit: Q1 and Q4 are ancillas that record the
// outcomes of the measured pair Q2, Q3. Qubits are 0-based in code, so Q1 is
// index 0 and Q4 is index 3.
namespace heisim::epr {

inline constexpr std::size_t kWidth = 4;
inline constexpr std::size_t kQ1 = 0;
inline constexpr std::size_t kQ2 = 1;
inline constexpr std::size_t kQ3 = 2;
inline constexpr std::size_t kQ4 = 3;

/// Agreement required between the two engines and the closed forms.
inline constexpr double kTolerance = 1e-10;

/// Raised when two routes to the same quantity disagree beyond kTolerance.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ExperimentConfig {
  double theta = 0.0;  ///< analyzer angle on Q2's arm, radians
  double phi = 0.0;    ///< analyzer angle on Q3's arm, radians
};

struct TimelineStep {
  int t;
  std::string description;
  std::vector<Gate> gates;
};

/**
 * Gate sequence of the experiment, grouped by time step:
 *   t=1  H on Q3, then CN with target Q2 and control Q3 (inverse Bell gate)
 *   t=2  analyzer R(theta) on Q2 and R(phi) on Q3
 *   t=3  CN Q1<-Q2 and CN Q4<-Q3 (recording onto the ancillas)
 *   t=4  CN Q1<-Q4 (local comparison after Q4 is carried to Q1)
 */
class Timeline {
 public:
  explicit Timeline(std::vector<TimelineStep> steps);

  std::span<const TimelineStep> steps() const { return steps_; }
  const TimelineStep& step(int t) const;
  /// All gates of steps 1..t in order.
  std::vector<Gate> gates_through(int t) const;
  std::vector<Gate> all_gates() const { return gates_through(4); }

 private:
  std::vector<TimelineStep> steps_;
};

Timeline build_timeline(const ExperimentConfig& cfg);

/// Closed-form values in terms of the analyzer angles.
namespace closed_form {
double joint_both_one(double theta, double phi);    ///< (1/2) cos^2((theta - phi) / 2)
double correlation(double theta, double phi);       ///< cos(theta - phi)
double outcomes_differ(double theta, double phi);   ///< sin^2((theta - phi) / 2)
double cos2_half_difference(double theta, double phi);
double sin2_half_sum(double theta, double phi);
/// sin(theta) Y2 X3 - cos(theta) Z2 X3 on four qubits.
OperatorSum q_z2_t2(double theta);
/// cos(phi) X3 + sin(phi) X2 Y3 on four qubits.
OperatorSum q_z3_t2(double phi);
}  // namespace closed_form

/// Descriptors and statevectors after each step t = 0..4.
struct Evolution {
  std::vector<DescriptorSet> descriptors;
  std::vector<StateVector> states;
};

Evolution run(const ExperimentConfig& cfg);

struct DescriptorPair {
  OperatorSum q_z2;
  OperatorSum q_z3;
};

/// q_z2(2), q_z3(2) from the Heisenberg engine.
DescriptorPair descriptors_at_t2(const ExperimentConfig& cfg);

struct JointProbability {
  double heisenberg;   ///< 1/4 + 1/4 <q_z2 + q_z3 + q_z2 q_z3>
  double schrodinger;  ///< P(Q2 = 1, Q3 = 1) from the statevector
  double closed_form;
  double linear_q_z2;  ///< <q_z2(2)>
  double linear_q_z3;  ///< <q_z3(2)>
  double correlation;  ///< <q_z2(2) q_z3(2)>
};

/// Probability that Q2 and Q3 both hold 1 at t=2, before any ancilla is used.
JointProbability joint_prob_both_one_at_t2(const ExperimentConfig& cfg);

struct DifferProbability {
  double heisenberg;   ///< 1/2 - 1/2 <q_z1(3) q_z4(3)>
  double schrodinger;  ///< P(Q1 = 1) after the full timeline
  double closed_form;
};

/// Probability that the recorded outcomes differ, read from Q1 at t=4.
DifferProbability prob_outcomes_differ_at_t4(const ExperimentConfig& cfg);

struct Marginal {
  double heisenberg;
  double schrodinger;
};

/// P(Q1 = 1) at t=3, i.e. Q2's record before the comparison gate.
Marginal record_marginal_t3(const ExperimentConfig& cfg);

struct Quantity {
  std::string name;
  int step;
  double closed_form;
  double heisenberg;
  double schrodinger;

  double engine_delta() const;
  /// Largest distance of either engine from the closed form.
  double closed_form_deviation() const;
};

struct CandidateDeviations {
  double sin2_half_difference;  ///< corrected form
  double cos2_half_difference;  ///< sign-flipped rival
  double sin2_half_sum;         ///< sign-flipped rival
};

struct ExperimentReport {
  double theta;
  double phi;
  std::vector<Quantity> quantities;
  /// Heisenberg-engine values of the headline quantities.
  double p_joint_t2;
  double corr_t2;
  double p_diff_t4;
  CandidateDeviations candidates;

  const Quantity& quantity(std::string_view name) const;
  double max_engine_delta() const;
  double max_closed_form_deviation() const;
  bool consistent(double tolerance = kTolerance) const;
};

/// Every tabulated quantity at t=1..4 in both engines, with t=2 values
/// labelled as pre-comparison.
ExperimentReport pre_vs_post_report(const ExperimentConfig& cfg);

/// theta - phi = k pi / 12 for k = 0..24 with phi = pi / 4. The nonzero phi
/// keeps theta + phi apart from theta - phi so every candidate form differs
/// somewhere on the grid.
std::vector<ExperimentConfig> default_grid();

struct SweepSummary {
  std::vector<ExperimentReport> rows;
  double p_joint_t2_min;
  double p_joint_t2_max;
  /// True when the t=2 joint probability is not constant over the sweep.
  bool t2_depends_on_angles;
};

SweepSummary sweep(std::span<const ExperimentConfig> grid);

enum class Candidate { Sin2HalfDifference = 0, Cos2HalfDifference = 1, Sin2HalfSum = 2 };
inline constexpr std::size_t kCandidateCount = 3;
const char* candidate_name(Candidate c);

struct AuditPoint {
  double theta;
  double phi;
  double simulated;
  std::array<double, kCandidateCount> candidate_values;
  std::array<double, kCandidateCount> deviations;
  /// separated[i][j]: candidates i and j differ by more than kTolerance here.
  std::array<std::array<bool, kCandidateCount>, kCandidateCount> separated;
  bool fully_discriminating;
};

struct AuditReport {
  std::vector<AuditPoint> points;
  std::array<double, kCandidateCount> max_deviation;
  std::vector<Candidate> matching;
};

/**
 * Compares the simulated P(outcomes differ) with the three candidate closed
 * forms at every grid point. Throws std::invalid_argument if the grid is
 * empty or some pair of candidates coincides at every point, since the
 * verdict would then be ambiguous.
 */
AuditReport sign_error_audit(std::span<const ExperimentConfig> grid);

}  // namespace heisim::epr
