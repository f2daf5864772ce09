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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "heisim/gate.hpp"
#include "heisim/pauli.hpp"

namespace heisim {

inline constexpr std::size_t kMaxStateWidth = 20;

/**
 * Dense amplitudes of an n-qubit pure state in the |1>-first ordering.
 *
 * Qubit q (0-based) owns bit n-1-q of the amplitude index, and a clear bit
 * means the qubit holds 1. For two qubits the order is |1,1>, |1,0>, |0,1>,
 * |0,0>, so the all-zeros state is the last index.
 */
class StateVector {
 public:
  static StateVector all_zeros(std::size_t width);
  /// Basis ket with the given per-qubit values (qubit 0 first).
  static StateVector basis_state(std::span<const int> values);
  /// Requires a power-of-two length and unit norm within 1e-12.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t width() const { return width_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
  double norm() const;

  /// Applies `gate` in place. Throws on operands outside the register.
  void apply(const Gate& gate);

  /// Index of the basis ket holding `values` (qubit 0 first).
  static std::size_t index_of(std::span<const int> values);
  /// Value (0 or 1) that qubit `qubit` holds in basis element `index`.
  static int qubit_value(std::size_t index, std::size_t qubit, std::size_t width);
  /// ASCII label such as "|1,0,1>".
  static std::string basis_label(std::size_t index, std::size_t width);
  /// Index of the same ket in the conventional |0>-first ordering.
  static std::size_t to_conventional_index(std::size_t index, std::size_t width);

 private:
  StateVector(std::size_t width, std::vector<Complex> amplitudes);

  std::size_t width_;
  std::vector<Complex> amplitudes_;
};

StateVector apply_gate(StateVector state, const Gate& gate);

/// <psi|op|psi>. Throws if `op` is not Hermitian or widths differ.
double expectation(const StateVector& state, const OperatorSum& op);

/// Total probability of basis kets matching every (qubit, value) pair.
double joint_probability(const StateVector& state, std::span<const QubitValue> assignment);

/// CSV dump with columns index,basis,re,im.
void write_state_csv(std::ostream& out, const StateVector& state);

}  // namespace heisim
