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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heisim/gate.hpp"

namespace heisim {

/// Seeded random circuit over H, CN, X, Y, Z and the analyzer rotation.
/// The same (width, depth, seed) always yields the same gates.
std::vector<Gate> random_circuit(std::size_t width, std::size_t depth, std::uint64_t seed);

struct PictureComparison {
  std::string observable;  ///< e.g. "z2" or "z1*z3"
  double heisenberg;
  double schrodinger;
};

struct PictureCheckReport {
  std::size_t width;
  std::vector<Gate> gates;
  /// Observables compared after the last gate.
  std::vector<PictureComparison> final_comparisons;
  /// Number of comparisons over all steps.
  std::size_t comparisons;
  /// Largest |heisenberg - schrodinger| over every step.
  double max_deviation;
};

/// Compares <q_zi(t)> and <q_zi(t) q_zj(t)> against the evolved statevector
/// after every gate.
PictureCheckReport compare_pictures(std::size_t width, std::span<const Gate> gates);

}  // namespace heisim
