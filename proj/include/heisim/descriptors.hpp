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
#include <stdexcept>
#include <string>
#include <vector>

#include "heisim/gate.hpp"
#include "heisim/pauli.hpp"

namespace heisim {

/**
 * Images U^dagger P U of the single-qubit Paulis on each operand of a gate,
 * written over the gate's own operands (local qubit j is operand j).
 */
class ConjugationRule {
 public:
  ConjugationRule(std::string gate_name, std::size_t arity, std::vector<OperatorSum> images);

  const std::string& gate_name() const { return gate_name_; }
  std::size_t arity() const { return arity_; }
  /// Image of `axis` (X, Y or Z) on operand `slot`.
  const OperatorSum& image(std::size_t slot, PauliAxis axis) const;

 private:
  std::string gate_name_;
  std::size_t arity_;
  std::vector<OperatorSum> images_;
};

/// Hand-written tables for the catalog gates; custom gates are expanded in
/// the Pauli basis from their matrix.
ConjugationRule conjugation_rule(const Gate& gate);

/// Pauli-basis expansion of U^dagger P U computed from the gate matrix.
ConjugationRule conjugation_rule_from_matrix(const Gate& gate);

inline constexpr std::size_t kMaxDescriptorTerms = std::size_t{1} << 16;

class TermLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Heisenberg-picture descriptors q_x, q_y, q_z of every qubit after `step`
 * gates, with the reference state held at all zeros.
 */
class DescriptorSet {
 public:
  /// Step 0: q_a of qubit i is the bare Pauli a on qubit i.
  static DescriptorSet initial(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t step() const { return step_; }

  const OperatorSum& get(std::size_t qubit, PauliAxis axis) const;
  const OperatorSum& x(std::size_t qubit) const { return get(qubit, PauliAxis::X); }
  const OperatorSum& y(std::size_t qubit) const { return get(qubit, PauliAxis::Y); }
  const OperatorSum& z(std::size_t qubit) const { return get(qubit, PauliAxis::Z); }

  std::size_t max_terms() const;

  /// "q_z2" style name with the 1-based qubit number.
  static std::string descriptor_name(std::size_t qubit, PauliAxis axis);

 private:
  friend DescriptorSet evolve(const DescriptorSet& ds, const Gate& gate);

  DescriptorSet(std::size_t width, std::size_t step, std::vector<OperatorSum> descriptors);
  static std::size_t slot(std::size_t qubit, PauliAxis axis);

  std::size_t width_;
  std::size_t step_;
  std::vector<OperatorSum> descriptors_;
};

/**
 * One Heisenberg step: q(t+1) = V^dagger (U^dagger q U) V where V is the
 * circuit so far. The gate-local image U^dagger q U is taken from the
 * conjugation rule and each Pauli in it is replaced by the step-t descriptor
 * of that qubit, which is valid because conjugation by V is an algebra
 * homomorphism. Descriptors of qubits the gate does not touch are copied.
 *
 * Throws TermLimitExceeded if any descriptor would exceed kMaxDescriptorTerms.
 */
DescriptorSet evolve(const DescriptorSet& ds, const Gate& gate);

/// Applies `gates` in order starting from `ds`.
DescriptorSet evolve_all(DescriptorSet ds, std::span<const Gate> gates);

/// <0...0|expr|0...0> for a Hermitian expression built from descriptors.
double descriptor_expectation(const DescriptorSet& ds, const OperatorSum& expr);

struct InvarianceReport {
  bool holds = true;
  std::vector<std::string> checked;
  std::vector<std::string> violations;
};

/**
 * Checks that descriptors untouched by `gate` come through `after` termwise
 * identical. A descriptor is checked when its qubit is not an operand of the
 * gate, or when none of its terms act on the gate's operands.
 */
InvarianceReport untouched_invariance_check(const DescriptorSet& before,
                                            const DescriptorSet& after, const Gate& gate);

}  // namespace heisim
