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

#include "heisim/picture_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "heisim/descriptors.hpp"
#include "heisim/state_vector.hpp"

namespace heisim {

std::vector<Gate> random_circuit(std::size_t width, std::size_t depth, std::uint64_t seed) {
  if (width < 1 || width > kMaxStateWidth) throw std::invalid_argument("random_circuit: width out of range");
  std::mt19937_64 rng(seed);
  // Raw engine output only, so the sequence is the same on every platform.
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  auto other_qubit = [&](std::size_t q) {
    std::size_t c = rng() % (width - 1);
    return c >= q ? c + 1 : c;
  };

  std::vector<Gate> gates;
  gates.reserve(depth);
  while (gates.size() < depth) {
    const std::size_t q = rng() % width;
    switch (rng() % 6) {
      case 0: gates.push_back(Gate::hadamard(q)); break;
      case 1: gates.push_back(Gate::pauli_x(q)); break;
      case 2: gates.push_back(Gate::pauli_y(q)); break;
      case 3: gates.push_back(Gate::pauli_z(q)); break;
      case 4: gates.push_back(Gate::analyzer(q, (2 * uniform() - 1) * std::numbers::pi)); break;
      default:
        if (width > 1) gates.push_back(Gate::cnot(q, other_qubit(q)));
        break;
    }
  }
  return gates;
}

PictureCheckReport compare_pictures(std::size_t width, std::span<const Gate> gates) {
  PictureCheckReport report{width, {gates.begin(), gates.end()}, {}, 0, 0.0};
  DescriptorSet ds = DescriptorSet::initial(width);
  StateVector psi = StateVector::all_zeros(width);

  std::vector<OperatorSum> bare;
  for (std::size_t q = 0; q < width; ++q) bare.emplace_back(PauliString::single(width, q, PauliAxis::Z));

  for (std::size_t k = 0; k < gates.size(); ++k) {
    ds = evolve(ds, gates[k]);
    psi.apply(gates[k]);
    const bool last = k + 1 == gates.size();
    auto record = [&](std::string name, double heis, double schr) {
      report.max_deviation = std::max(report.max_deviation, std::abs(heis - schr));
      ++report.comparisons;
      if (last) report.final_comparisons.push_back({std::move(name), heis, schr});
    };
    for (std::size_t i = 0; i < width; ++i) {
      record("z" + std::to_string(i + 1), descriptor_expectation(ds, ds.z(i)), expectation(psi, bare[i]));
      for (std::size_t j = i + 1; j < width; ++j) {
        record("z" + std::to_string(i + 1) + "*z" + std::to_string(j + 1),
               descriptor_expectation(ds, ds.z(i) * ds.z(j)), expectation(psi, bare[i] * bare[j]));
      }
    }
  }
  return report;
}

}  // namespace heisim
