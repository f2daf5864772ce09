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

#include "heisim/descriptors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace heisim {

namespace {

constexpr PauliAxis kAxes[] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

std::size_t axis_index(PauliAxis axis) {
  if (axis == PauliAxis::I) throw std::invalid_argument("descriptor axis must be X, Y or Z");
  return static_cast<std::size_t>(axis) - 1;
}

// Local operator from a string such as "-XZ" (slot 0 first) and a coefficient.
OperatorSum local(std::string_view text, Complex coefficient = 1.0) {
  return OperatorSum(PauliString::parse(text), coefficient);
}

ConjugationRule single_qubit_rule(const Gate& gate) {
  const double a = gate.angle();
  switch (gate.kind()) {
    case GateKind::Hadamard:
      return ConjugationRule(gate.name(), 1, {local("Z"), local("-Y"), local("X")});
    case GateKind::PauliX:
      return ConjugationRule(gate.name(), 1, {local("X"), local("-Y"), local("-Z")});
    case GateKind::PauliY:
      return ConjugationRule(gate.name(), 1, {local("-X"), local("Y"), local("-Z")});
    case GateKind::PauliZ:
      return ConjugationRule(gate.name(), 1, {local("-X"), local("-Y"), local("Z")});
    case GateKind::Analyzer:
      return ConjugationRule(gate.name(), 1,
                             {local("X"), local("Y", std::cos(a)) + local("Z", std::sin(a)),
                              local("Z", std::cos(a)) + local("Y", -std::sin(a))});
    default:
      break;
  }
  return conjugation_rule_from_matrix(gate);
}

ConjugationRule cnot_rule(const Gate& gate) {
  // Slot 0 is the target, slot 1 the control. Z on the target picks up a
  // minus sign because the control's Z is +1 on |1>, the toggling value.
  return ConjugationRule(gate.name(), 2,
                         {local("XI"), local("-YZ"), local("-ZZ"),  //
                          local("XX"), local("XY"), local("IZ")});
}

// Entry (r, c) of the local Pauli string `s` in the |1>-first basis.
Complex local_entry(const PauliString& s, std::size_t r, std::size_t c) {
  const std::size_t k = s.width();
  Complex value = s.phase();
  for (std::size_t j = 0; j < k; ++j) {
    const unsigned rb = (r >> (k - 1 - j)) & 1U, cb = (c >> (k - 1 - j)) & 1U;
    switch (s.axis(j)) {
      case PauliAxis::I: value *= (rb == cb) ? 1.0 : 0.0; break;
      case PauliAxis::X: value *= (rb != cb) ? 1.0 : 0.0; break;
      case PauliAxis::Y:
        value *= (rb == cb) ? Complex{0.0} : (rb == 0 ? Complex{0, -1} : Complex{0, 1});
        break;
      case PauliAxis::Z: value *= (rb != cb) ? 0.0 : (rb == 0 ? 1.0 : -1.0); break;
    }
  }
  return value;
}

PauliString local_string_from_index(std::size_t k, std::size_t code) {
  std::vector<PauliAxis> axes(k);
  for (std::size_t j = 0; j < k; ++j) axes[j] = static_cast<PauliAxis>((code >> (2 * j)) & 3U);
  return PauliString(axes);
}

}  // namespace

ConjugationRule::ConjugationRule(std::string gate_name, std::size_t arity,
                                 std::vector<OperatorSum> images)
    : gate_name_(std::move(gate_name)), arity_(arity), images_(std::move(images)) {
  if (images_.size() != 3 * arity_) throw std::invalid_argument("rule needs three images per operand");
  for (const auto& img : images_) {
    if (img.width() != arity_) throw std::invalid_argument("rule image width must equal gate arity");
  }
}

const OperatorSum& ConjugationRule::image(std::size_t slot, PauliAxis axis) const {
  if (slot >= arity_) throw std::out_of_range("rule slot out of range");
  return images_[3 * slot + axis_index(axis)];
}

ConjugationRule conjugation_rule(const Gate& gate) {
  if (gate.kind() == GateKind::Cnot) return cnot_rule(gate);
  return single_qubit_rule(gate);
}

ConjugationRule conjugation_rule_from_matrix(const Gate& gate) {
  const std::size_t k = gate.arity();
  const std::size_t dim = gate.dimension();
  const auto u = gate.matrix();
  std::vector<OperatorSum> images;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (PauliAxis axis : kAxes) {
      const PauliString p = PauliString::single(k, slot, axis);
      // conj = U^dagger P U
      std::vector<Complex> pu(dim * dim, 0.0), conj(dim * dim, 0.0);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          for (std::size_t m = 0; m < dim; ++m) pu[r * dim + c] += local_entry(p, r, m) * u[m * dim + c];
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          for (std::size_t m = 0; m < dim; ++m) conj[r * dim + c] += std::conj(u[m * dim + r]) * pu[m * dim + c];
      // Coefficient of Q is Tr(Q conj) / dim.
      std::vector<std::pair<PauliString, Complex>> terms;
      for (std::size_t code = 0; code < (std::size_t{1} << (2 * k)); ++code) {
        const PauliString q = local_string_from_index(k, code);
        Complex tr = 0.0;
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t m = 0; m < dim; ++m) tr += local_entry(q, r, m) * conj[m * dim + r];
        terms.emplace_back(q, tr / static_cast<double>(dim));
      }
      images.push_back(OperatorSum::from_terms(k, terms));
    }
  }
  return ConjugationRule(gate.name(), k, std::move(images));
}

DescriptorSet::DescriptorSet(std::size_t width, std::size_t step, std::vector<OperatorSum> descriptors)
    : width_(width), step_(step), descriptors_(std::move(descriptors)) {}

DescriptorSet DescriptorSet::initial(std::size_t width) {
  if (width < 1 || width > 20) {
    throw std::invalid_argument("descriptor width must be in [1, 20], got " + std::to_string(width));
  }
  std::vector<OperatorSum> descriptors;
  descriptors.reserve(3 * width);
  for (std::size_t q = 0; q < width; ++q) {
    for (PauliAxis axis : kAxes) descriptors.emplace_back(PauliString::single(width, q, axis));
  }
  return DescriptorSet(width, 0, std::move(descriptors));
}

std::size_t DescriptorSet::slot(std::size_t qubit, PauliAxis axis) {
  return 3 * qubit + axis_index(axis);
}

const OperatorSum& DescriptorSet::get(std::size_t qubit, PauliAxis axis) const {
  if (qubit >= width_) throw std::out_of_range("descriptor qubit out of range");
  return descriptors_[slot(qubit, axis)];
}

std::size_t DescriptorSet::max_terms() const {
  std::size_t worst = 0;
  for (const auto& d : descriptors_) worst = std::max(worst, d.size());
  return worst;
}

std::string DescriptorSet::descriptor_name(std::size_t qubit, PauliAxis axis) {
  return std::string("q_") + static_cast<char>(std::tolower(axis_symbol(axis))) +
         std::to_string(qubit + 1);
}

DescriptorSet evolve(const DescriptorSet& ds, const Gate& gate) {
  const auto ops = gate.operands();
  for (std::size_t q : ops) {
    if (q >= ds.width_) {
      throw std::out_of_range("gate " + gate.label() + " touches qubit outside width " +
                              std::to_string(ds.width_));
    }
  }
  const ConjugationRule rule = conjugation_rule(gate);
  std::vector<OperatorSum> next = ds.descriptors_;

  for (std::size_t slot = 0; slot < ops.size(); ++slot) {
    for (PauliAxis axis : kAxes) {
      OperatorSum result(ds.width_);
      for (const auto& term : rule.image(slot, axis).terms()) {
        OperatorSum product = OperatorSum::identity(ds.width_).scaled(term.coefficient);
        for (std::size_t j = 0; j < ops.size(); ++j) {
          const PauliAxis a = term.string.axis(j);
          if (a != PauliAxis::I) product = product * ds.get(ops[j], a);
        }
        result = result + product;
      }
      if (result.size() > kMaxDescriptorTerms) {
        throw TermLimitExceeded(DescriptorSet::descriptor_name(ops[slot], axis) + " would have " +
                                std::to_string(result.size()) + " terms after " + gate.label());
      }
      next[DescriptorSet::slot(ops[slot], axis)] = std::move(result);
    }
  }
  return DescriptorSet(ds.width_, ds.step_ + 1, std::move(next));
}

DescriptorSet evolve_all(DescriptorSet ds, std::span<const Gate> gates) {
  for (const auto& g : gates) ds = evolve(ds, g);
  return ds;
}

double descriptor_expectation(const DescriptorSet& ds, const OperatorSum& expr) {
  if (expr.width() != ds.width()) throw std::invalid_argument("descriptor_expectation: width mismatch");
  if (!expr.is_hermitian()) {
    throw std::invalid_argument("descriptor_expectation: expression is not Hermitian");
  }
  return expectation_in_all_zeros(expr).real();
}

InvarianceReport untouched_invariance_check(const DescriptorSet& before, const DescriptorSet& after,
                                            const Gate& gate) {
  if (before.width() != after.width()) throw std::invalid_argument("descriptor widths differ");
  std::uint64_t op_mask = 0;
  for (std::size_t q : gate.operands()) op_mask |= std::uint64_t{1} << q;

  InvarianceReport report;
  for (std::size_t q = 0; q < before.width(); ++q) {
    for (PauliAxis axis : kAxes) {
      const OperatorSum& old_desc = before.get(q, axis);
      const bool off_support = (old_desc.support_mask() & op_mask) == 0;
      if (gate.acts_on(q) && !off_support) continue;
      const std::string name = DescriptorSet::descriptor_name(q, axis);
      report.checked.push_back(name);
      if (old_desc.max_deviation(after.get(q, axis)) != 0.0) {
        report.holds = false;
        report.violations.push_back(name);
      }
    }
  }
  return report;
}

}  // namespace heisim
