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

#include "heisim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace heisim {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

double unitarity_error(std::span<const Complex> matrix, std::size_t dim) {
  if (matrix.size() != dim * dim) throw std::invalid_argument("matrix size does not match dimension");
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) acc += std::conj(matrix[k * dim + r]) * matrix[k * dim + c];
      worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Gate::Matrix cnot_matrix() {
  // Z- on the diagonal blocks, Z+ off the diagonal (Z+ projects onto |1>).
  return {0, 0, 1, 0,  //
          0, 1, 0, 0,  //
          1, 0, 0, 0,  //
          0, 0, 0, 1};
}

Gate::Gate(GateKind kind, std::string name, std::vector<std::size_t> operands, Matrix matrix,
           double angle)
    : kind_(kind), name_(std::move(name)), operands_(std::move(operands)),
      matrix_(std::move(matrix)), angle_(angle) {
  if (operands_.empty() || operands_.size() > 2) {
    throw std::invalid_argument("gate " + name_ + " must act on one or two qubits");
  }
  if (operands_.size() == 2 && operands_[0] == operands_[1]) {
    throw std::invalid_argument("gate " + name_ + " has repeated operand qubit");
  }
  const std::size_t dim = dimension();
  if (matrix_.size() != dim * dim) {
    throw std::invalid_argument("gate " + name_ + " matrix has wrong size");
  }
  if (unitarity_error(matrix_, dim) > kUnitarityTolerance) {
    throw std::invalid_argument("gate " + name_ + " matrix is not unitary");
  }
}

Gate Gate::hadamard(std::size_t qubit) {
  const double h = std::numbers::sqrt2 / 2.0;
  return Gate(GateKind::Hadamard, "H", {qubit}, {h, h, h, -h});
}

Gate Gate::cnot(std::size_t target, std::size_t control) {
  return Gate(GateKind::Cnot, "CN", {target, control}, cnot_matrix());
}

Gate Gate::pauli_x(std::size_t qubit) { return Gate(GateKind::PauliX, "X", {qubit}, {0, 1, 1, 0}); }

Gate Gate::pauli_y(std::size_t qubit) {
  return Gate(GateKind::PauliY, "Y", {qubit}, {0, -kI, kI, 0});
}

Gate Gate::pauli_z(std::size_t qubit) { return Gate(GateKind::PauliZ, "Z", {qubit}, {1, 0, 0, -1}); }

Gate Gate::analyzer(std::size_t qubit, double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("analyzer angle must be finite");
  const double c = std::cos(angle / 2.0);
  const Complex s = kI * std::sin(angle / 2.0);
  return Gate(GateKind::Analyzer, "R", {qubit}, {c, s, s, c}, angle);
}

Gate Gate::custom(std::string name, std::vector<std::size_t> operands, Matrix matrix) {
  return Gate(GateKind::Custom, std::move(name), std::move(operands), std::move(matrix));
}

bool Gate::acts_on(std::size_t qubit) const {
  return std::find(operands_.begin(), operands_.end(), qubit) != operands_.end();
}

std::string Gate::label() const {
  std::string out = name_ + "(" + std::to_string(operands_[0] + 1);
  if (operands_.size() == 2) {
    out += (kind_ == GateKind::Cnot ? "<-" : ",") + std::to_string(operands_[1] + 1);
  }
  if (kind_ == GateKind::Analyzer) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "; %.6f", angle_);
    out += buf;
  }
  return out + ")";
}

}  // namespace heisim
