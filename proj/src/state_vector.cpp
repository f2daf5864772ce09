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

#include "heisim/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace heisim {

namespace {

void check_width(std::size_t width) {
  if (width < 1 || width > kMaxStateWidth) {
    throw std::invalid_argument("state width must be in [1, 20], got " + std::to_string(width));
  }
}

std::size_t bit_position(std::size_t qubit, std::size_t width) { return width - 1 - qubit; }

}  // namespace

StateVector::StateVector(std::size_t width, std::vector<Complex> amplitudes)
    : width_(width), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::all_zeros(std::size_t width) {
  check_width(width);
  std::vector<Complex> amps(std::size_t{1} << width, 0.0);
  amps.back() = 1.0;
  return StateVector(width, std::move(amps));
}

StateVector StateVector::basis_state(std::span<const int> values) {
  check_width(values.size());
  std::vector<Complex> amps(std::size_t{1} << values.size(), 0.0);
  amps[index_of(values)] = 1.0;
  return StateVector(values.size(), std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  const auto width = static_cast<std::size_t>(std::countr_zero(size));
  check_width(width);
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12) throw std::invalid_argument("amplitudes are not normalized");
  return StateVector(width, std::move(amplitudes));
}

double StateVector::norm() const {
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

std::size_t StateVector::index_of(std::span<const int> values) {
  std::size_t index = 0;
  for (int v : values) {
    if (v != 0 && v != 1) throw std::invalid_argument("qubit value must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(1 - v);
  }
  return index;
}

int StateVector::qubit_value(std::size_t index, std::size_t qubit, std::size_t width) {
  return 1 - static_cast<int>((index >> bit_position(qubit, width)) & 1U);
}

std::string StateVector::basis_label(std::size_t index, std::size_t width) {
  std::string out = "|";
  for (std::size_t q = 0; q < width; ++q) {
    if (q > 0) out += ',';
    out += static_cast<char>('0' + qubit_value(index, q, width));
  }
  return out + ">";
}

std::size_t StateVector::to_conventional_index(std::size_t index, std::size_t width) {
  return index ^ ((std::size_t{1} << width) - 1);
}

void StateVector::apply(const Gate& gate) {
  const auto ops = gate.operands();
  const std::size_t k = ops.size();
  for (std::size_t q : ops) {
    if (q >= width_) {
      throw std::out_of_range("gate " + gate.label() + " touches qubit outside width " +
                              std::to_string(width_));
    }
  }
  const std::size_t dim = gate.dimension();
  const auto m = gate.matrix();

  // offsets[l] holds the index bits selecting local basis element l.
  std::vector<std::size_t> offsets(dim, 0);
  std::size_t op_mask = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = std::size_t{1} << bit_position(ops[j], width_);
    op_mask |= bit;
    for (std::size_t l = 0; l < dim; ++l) {
      if ((l >> (k - 1 - j)) & 1U) offsets[l] |= bit;
    }
  }

  std::vector<Complex> local(dim);
  for (std::size_t base = 0; base < amplitudes_.size(); ++base) {
    if (base & op_mask) continue;
    for (std::size_t l = 0; l < dim; ++l) local[l] = amplitudes_[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += m[r * dim + c] * local[c];
      amplitudes_[base | offsets[r]] = acc;
    }
  }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

double expectation(const StateVector& state, const OperatorSum& op) {
  const std::size_t n = state.width();
  if (op.width() != n) throw std::invalid_argument("expectation: width mismatch");
  if (!op.is_hermitian()) throw std::invalid_argument("expectation: operator is not Hermitian");
  const auto psi = state.amplitudes();
  static constexpr Complex kPowersOfI[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  Complex total = 0.0;
  double scale = 0.0;
  for (const auto& term : op.terms()) {
    std::size_t flip = 0, sign = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << bit_position(q, n);
      if ((term.string.x_mask() >> q) & 1U) flip |= bit;
      if ((term.string.z_mask() >> q) & 1U) sign |= bit;
    }
    // Y|1> = i|0> and Y|0> = -i|1>, i.e. a factor i times the Z sign.
    const auto y_count = std::popcount(term.string.x_mask() & term.string.z_mask());
    Complex sum = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const Complex v = std::conj(psi[k ^ flip]) * psi[k];
      sum += (std::popcount(k & sign) & 1) ? -v : v;
    }
    total += term.coefficient * kPowersOfI[y_count & 3] * sum;
    scale += std::abs(term.coefficient);
  }
  if (std::abs(total.imag()) > 1e-12 * std::max(1.0, scale)) {
    throw std::logic_error("expectation: imaginary residue exceeds tolerance");
  }
  return total.real();
}

double joint_probability(const StateVector& state, std::span<const QubitValue> assignment) {
  const std::size_t n = state.width();
  std::size_t care = 0, want = 0;
  for (const auto& [qubit, value] : assignment) {
    if (qubit >= n) throw std::out_of_range("joint_probability: qubit outside width");
    if (value != 0 && value != 1) throw std::invalid_argument("qubit value must be 0 or 1");
    const std::size_t bit = std::size_t{1} << bit_position(qubit, n);
    if ((care & bit) && ((want & bit) != 0) != (value == 0)) return 0.0;
    care |= bit;
    if (value == 0) want |= bit;
  }
  double p = 0.0;
  const auto psi = state.amplitudes();
  for (std::size_t k = 0; k < psi.size(); ++k) {
    if ((k & care) == want) p += std::norm(psi[k]);
  }
  return p;
}

void write_state_csv(std::ostream& out, const StateVector& state) {
  out << "index,basis,re,im\n";
  const auto psi = state.amplitudes();
  char buf[64];
  for (std::size_t k = 0; k < psi.size(); ++k) {
    out << k << ",\"" << StateVector::basis_label(k, state.width()) << "\",";
    std::snprintf(buf, sizeof buf, "%.12g,%.12g", psi[k].real(), psi[k].imag());
    out << buf << '\n';
  }
}

}  // namespace heisim
