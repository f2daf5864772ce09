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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heisim {

using Complex = std::complex<double>;

/** Single-qubit Pauli operators (and identity). */
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_symbol(PauliAxis axis);

/** Widest string the two 64-bit masks can hold. */
inline constexpr std::size_t kMaxPauliWidth = 64;

/**
 * A phased tensor product of single-qubit Paulis, stored in symplectic form.
 *
 * Qubit q carries X if bit q of the x mask is set, Z if bit q of the z mask is
 * set, and Y if both are set (no hidden phase: Y is the Pauli matrix itself).
 * The overall phase is i^phase_exponent, with the exponent kept in [0, 4).
 */
class OperatorSum;

class PauliString {
 public:
  /// Identity on `width` qubits with phase +1.
  explicit PauliString(std::size_t width);
  PauliString(std::span<const PauliAxis> axes, std::uint8_t phase_exponent = 0);

  static PauliString single(std::size_t width, std::size_t qubit, PauliAxis axis);

  /// Parses e.g. "XIZ", "-YY", "+iZ" or "-i XZ" (axes listed from qubit 0).
  static PauliString parse(std::string_view text);

  std::size_t width() const { return width_; }
  PauliAxis axis(std::size_t qubit) const;
  std::vector<PauliAxis> axes() const;

  std::uint8_t phase_exponent() const { return phase_; }
  Complex phase() const;

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t support_mask() const { return x_ | z_; }
  std::size_t weight() const;

  bool is_hermitian() const { return (phase_ & 1U) == 0; }
  bool is_identity() const { return support_mask() == 0; }

  PauliString with_axis(std::size_t qubit, PauliAxis axis) const;
  PauliString with_phase(std::uint8_t phase_exponent) const;
  PauliString unphased() const { return with_phase(0); }

  /// Rendering such as "-i * X1 Z3"; qubits are numbered from 1.
  std::string to_string() const;

  /// Canonical order: lowest differing qubit decides, with I < X < Y < Z.
  /// Phase breaks ties.
  friend bool operator<(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  PauliString(std::size_t width, std::uint64_t x, std::uint64_t z, std::uint8_t phase);
  friend PauliString multiply_strings(const PauliString& a, const PauliString& b);
  friend class OperatorSum;
  friend OperatorSum sum_multiply(const OperatorSum& a, const OperatorSum& b);

  std::size_t width_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint8_t phase_ = 0;
};

/// Group product a*b with the accumulated phase. Throws on width mismatch.
PauliString multiply_strings(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply_strings(a, b);
}

/**
 * A finite complex-weighted sum of phase-free Pauli strings.
 *
 * Terms are kept in canonical string order with duplicates merged and
 * coefficients of magnitude below kPruneTolerance dropped, so two sums that
 * represent the same operator have identical term lists up to rounding.
 */
class OperatorSum {
 public:
  struct Term {
    PauliString string;
    Complex coefficient;
  };

  static constexpr double kPruneTolerance = 1e-14;

  /// The zero operator.
  explicit OperatorSum(std::size_t width);
  /// coefficient * s, with the string's phase folded into the coefficient.
  OperatorSum(const PauliString& s, Complex coefficient = 1.0);

  static OperatorSum identity(std::size_t width);
  static OperatorSum from_terms(std::size_t width,
                                std::span<const std::pair<PauliString, Complex>> terms);

  std::size_t width() const { return width_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the phase-free string `s`, zero if absent.
  Complex coefficient(const PauliString& s) const;

  std::uint64_t support_mask() const;
  double max_imaginary() const;
  bool is_hermitian(double tolerance = 1e-12) const { return max_imaginary() <= tolerance; }

  OperatorSum scaled(Complex factor) const;

  /// Largest coefficient difference over the union of both term sets.
  double max_deviation(const OperatorSum& other) const;

  /// Terms joined as "+0.866025 * Y2 X3 -0.500000 * Z2 X3"; "0" if empty.
  std::string to_string() const;

 private:
  friend OperatorSum sum_add(const OperatorSum& a, const OperatorSum& b);
  friend OperatorSum sum_multiply(const OperatorSum& a, const OperatorSum& b);

  void canonicalize();

  std::size_t width_;
  std::vector<Term> terms_;
};

OperatorSum sum_add(const OperatorSum& a, const OperatorSum& b);
OperatorSum sum_multiply(const OperatorSum& a, const OperatorSum& b);

inline OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) { return sum_add(a, b); }
inline OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) {
  return sum_add(a, b.scaled(-1.0));
}
inline OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  return sum_multiply(a, b);
}
inline OperatorSum operator*(Complex factor, const OperatorSum& a) { return a.scaled(factor); }

/**
 * <0...0|op|0...0>, where |0> is the second basis vector (|1> = (1,0)^T).
 * Each term contributes coefficient * prod(m(axis)) with m(I) = 1, m(Z) = -1
 * and m(X) = m(Y) = 0.
 */
Complex expectation_in_all_zeros(const OperatorSum& op);

/// A required computational-basis value (0 or 1) for one qubit.
struct QubitValue {
  std::size_t qubit;
  int value;
};

/// Product of single-qubit projectors (1 + s*Z_q)/2 with s = +1 for value 1 and
/// s = -1 for value 0. An empty assignment gives the identity.
OperatorSum projector(std::size_t width, std::span<const QubitValue> assignment);

/// Coefficient rendered with an explicit sign and six decimals.
std::string format_coefficient(Complex c);

}  // namespace heisim
