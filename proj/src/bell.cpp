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

#include "heisim/bell.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace heisim::bell {

CorrelationDetail correlation_detail(double theta, double phi) {
  const epr::ExperimentConfig cfg{theta, phi};
  const epr::Timeline timeline = epr::build_timeline(cfg);
  const auto gates = timeline.gates_through(2);

  const DescriptorSet ds = evolve_all(DescriptorSet::initial(epr::kWidth), gates);
  StateVector psi = StateVector::all_zeros(epr::kWidth);
  for (const auto& g : gates) psi.apply(g);

  const OperatorSum z2(PauliString::single(epr::kWidth, epr::kQ2, PauliAxis::Z));
  const OperatorSum z3(PauliString::single(epr::kWidth, epr::kQ3, PauliAxis::Z));

  double same = 0.0, different = 0.0;
  for (int v2 : {0, 1}) {
    for (int v3 : {0, 1}) {
      const QubitValue outcome[] = {{epr::kQ2, v2}, {epr::kQ3, v3}};
      (v2 == v3 ? same : different) += joint_probability(psi, outcome);
    }
  }
  return {descriptor_expectation(ds, ds.z(epr::kQ2) * ds.z(epr::kQ3)), expectation(psi, z2 * z3),
          same - different, epr::closed_form::correlation(theta, phi)};
}

double correlation(double theta, double phi) {
  const CorrelationDetail d = correlation_detail(theta, phi);
  for (double other : {d.statevector, d.from_probabilities, d.closed_form}) {
    if (std::abs(d.descriptor - other) > epr::kTolerance) {
      throw epr::ConsistencyError("correlation routes disagree at theta=" + std::to_string(theta) +
                                  ", phi=" + std::to_string(phi));
    }
  }
  return d.descriptor;
}

namespace {

ChshResult combine(const ChshSetting& setting, const std::array<double, 4>& e) {
  const double s = e[0] - e[1] + e[2] + e[3];
  return {setting, e, s, std::abs(s) > 2.0 + kViolationMargin};
}

}  // namespace

ChshResult chsh(const ChshSetting& setting) {
  return combine(setting, {correlation(setting.a, setting.b), correlation(setting.a, setting.b_prime),
                           correlation(setting.a_prime, setting.b), correlation(setting.a_prime, setting.b_prime)});
}

ChshScan chsh_scan(double step, bool keep_cells) {
  if (!std::isfinite(step) || step <= 0.0) throw std::invalid_argument("scan step must be positive");
  const double ratio = std::numbers::pi / step;
  if (std::abs(ratio - std::round(ratio)) > 1e-9) throw std::invalid_argument("scan step must divide pi");
  const auto n = static_cast<std::size_t>(2 * std::llround(ratio));

  std::vector<double> angles(n);
  for (std::size_t k = 0; k < n; ++k) angles[k] = static_cast<double>(k) * step;
  // Only n^2 distinct (theta, phi) pairs feed the n^4 settings.
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = correlation(angles[i], angles[j]);
  }

  ChshScan scan{step, n, {}, -1.0, {}};
  if (keep_cells) scan.cells.reserve(n * n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t ap = 0; ap < n; ++ap) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t bp = 0; bp < n; ++bp) {
          const ChshResult r = combine({angles[a], angles[ap], angles[b], angles[bp]},
                                       {table[a * n + b], table[a * n + bp], table[ap * n + b], table[ap * n + bp]});
          if (std::abs(r.s) > scan.max_abs_s + kViolationMargin) {
            scan.max_abs_s = std::abs(r.s);
            scan.best = r;
          }
          if (keep_cells) scan.cells.push_back(r);
        }
      }
    }
  }
  return scan;
}

}  // namespace heisim::bell
