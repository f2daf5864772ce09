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
#include <span>
#include <string>
#include <vector>

#include "heisim/pauli.hpp"

namespace heisim {

enum class GateKind { Hadamard, Cnot, PauliX, PauliY, PauliZ, Analyzer, Custom };

/**
 * A one- or two-qubit unitary together with the qubits it acts on.
 *
 * Matrices are row-major in the |1>-first basis: for one qubit the basis is
 * (|1>, |0>), for two operands (a, b) it is |1,1>, |1,0>, |0,1>, |0,0> with
 * operand a as the leading index. A CNOT lists its target first and its
 * control second, so cnot(t, c) toggles t when c holds 1.
 *
 * The analyzer rotation is exp(+i angle X / 2); conjugation by it sends
 * Z to cos(angle) Z - sin(angle) Y and Y to cos(angle) Y + sin(angle) Z.
 */
class Gate {
 public:
  using Matrix = std::vector<Complex>;

  static constexpr double kUnitarityTolerance = 1e-12;

  static Gate hadamard(std::size_t qubit);
  static Gate cnot(std::size_t target, std::size_t control);
  static Gate pauli_x(std::size_t qubit);
  static Gate pauli_y(std::size_t qubit);
  static Gate pauli_z(std::size_t qubit);
  static Gate analyzer(std::size_t qubit, double angle);
  /// Arbitrary unitary; throws if `matrix` is not 2^k x 2^k unitary for k operands.
  static Gate custom(std::string name, std::vector<std::size_t> operands, Matrix matrix);

  GateKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::span<const std::size_t> operands() const { return operands_; }
  std::size_t arity() const { return operands_.size(); }
  std::size_t dimension() const { return std::size_t{1} << operands_.size(); }
  double angle() const { return angle_; }
  std::span<const Complex> matrix() const { return matrix_; }

  bool acts_on(std::size_t qubit) const;

  /// e.g. "H(3)", "CN(2<-3)", "R(2; 0.523599)" with 1-based qubits.
  std::string label() const;

 private:
  Gate(GateKind kind, std::string name, std::vector<std::size_t> operands, Matrix matrix,
       double angle = 0.0);

  GateKind kind_;
  std::string name_;
  std::vector<std::size_t> operands_;
  Matrix matrix_;
  double angle_;
};

/// max |(U^dagger U - 1)_{jk}| for a row-major dim x dim matrix.
double unitarity_error(std::span<const Complex> matrix, std::size_t dim);

/// The two-qubit matrix from the |1>-first CNOT definition.
Gate::Matrix cnot_matrix();

}  // namespace heisim
