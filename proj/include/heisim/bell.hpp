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
#include <vector>

#include "heisim/epr.hpp"

namespace heisim::bell {

/// All routes to E(theta, phi) = <q_z2(2) q_z3(2)> at t=2.
struct CorrelationDetail {
  double descriptor;          ///< <q_z2(2) q_z3(2)> from the Heisenberg engine
  double statevector;         ///< <Z2 Z3> on the rotated state
  double from_probabilities;  ///< P(same) - P(different) from joint probabilities
  double closed_form;         ///< cos(theta - phi)
};

CorrelationDetail correlation_detail(double theta, double phi);

/// Descriptor-route correlation; throws epr::ConsistencyError if any other
/// route disagrees by more than epr::kTolerance.
double correlation(double theta, double phi);

struct ChshSetting {
  double a;
  double a_prime;
  double b;
  double b_prime;
};

struct ChshResult {
  ChshSetting setting;
  /// E(a,b), E(a,b'), E(a',b), E(a',b').
  std::array<double, 4> correlations;
  /// E(a,b) - E(a,b') + E(a',b) + E(a',b').
  double s;
  bool violation;
};

inline constexpr double kViolationMargin = 1e-12;

ChshResult chsh(const ChshSetting& setting);

struct ChshScan {
  double step;
  std::size_t angles_per_axis;
  ChshResult best;
  double max_abs_s;
  /// Every cell in lexicographic (a, a', b, b') order, if requested.
  std::vector<ChshResult> cells;
};

/**
 * Exhaustive search over a, a', b, b' in {k * step : 0 <= k < 2 pi / step}.
 * `step` must divide pi. Ties go to the lexicographically smallest tuple.
 */
ChshScan chsh_scan(double step, bool keep_cells = false);

}  // namespace heisim::bell
