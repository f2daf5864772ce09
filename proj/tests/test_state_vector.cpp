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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dense_oracle.hpp"
#include "heisim/state_vector.hpp"

namespace heisim {
namespace {

TEST(StateVector, AllZerosIsLastBasisElement) {
  const StateVector two = StateVector::all_zeros(2);
  ASSERT_EQ(two.amplitudes().size(), 4u);
  EXPECT_EQ(two.amplitude(0), Complex(0.0));
  EXPECT_EQ(two.amplitude(1), Complex(0.0));
  EXPECT_EQ(two.amplitude(2), Complex(0.0));
  EXPECT_EQ(two.amplitude(3), Complex(1.0));

  const StateVector one = StateVector::all_zeros(1);
  EXPECT_EQ(one.amplitude(0), Complex(0.0));
  EXPECT_EQ(one.amplitude(1), Complex(1.0));
  EXPECT_DOUBLE_EQ(one.norm(), 1.0);
}

TEST(StateVector, WidthOutOfRange) {
  EXPECT_THROW(StateVector::all_zeros(0), std::invalid_argument);
  EXPECT_THROW(StateVector::all_zeros(21), std::invalid_argument);
}

TEST(StateVector, BasisOrderingAndLabels) {
  const char* labels[] = {"|1,1>", "|1,0>", "|0,1>", "|0,0>"};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(StateVector::basis_label(k, 2), labels[k]);
  const int ket01[] = {0, 1};
  EXPECT_EQ(StateVector::index_of(ket01), 2u);
  // Conventional |0>-first ordering puts |0,1> at index 1.
  EXPECT_EQ(StateVector::to_conventional_index(2, 2), 1u);
  EXPECT_EQ(StateVector::to_conventional_index(3, 2), 0u);
}

TEST(StateVector, CnotOnZeroOneGivesOneOne) {
  const int ket01[] = {0, 1};
  const StateVector in = StateVector::basis_state(ket01);
  const StateVector out = apply_gate(in, Gate::cnot(0, 1));
  // Exact 0/1 amplitudes, no rounding.
  EXPECT_EQ(out.amplitude(0), Complex(1.0));
  EXPECT_EQ(out.amplitude(1), Complex(0.0));
  EXPECT_EQ(out.amplitude(2), Complex(0.0));
  EXPECT_EQ(out.amplitude(3), Complex(0.0));
}

TEST(StateVector, CnotMatrixMatchesBlockProjectorForm) {
  // [[Z-, Z+], [Z+, Z-]] with Z+ = |1><1| = diag(1, 0) and Z- = diag(0, 1).
  const Gate::Matrix m = cnot_matrix();
  const double zp[2][2] = {{1, 0}, {0, 0}}, zm[2][2] = {{0, 0}, {0, 1}};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const bool diagonal_block = (r / 2) == (c / 2);
      const double expected = diagonal_block ? zm[r % 2][c % 2] : zp[r % 2][c % 2];
      EXPECT_EQ(m[static_cast<std::size_t>(r * 4 + c)], Complex(expected));
    }
  }
}

TEST(StateVector, HadamardTwiceIsIdentity) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    const StateVector s = StateVector::from_amplitudes({a / n, b / n});
    const StateVector back = apply_gate(apply_gate(s, Gate::hadamard(0)), Gate::hadamard(0));
    EXPECT_LE(std::abs(back.amplitude(0) - s.amplitude(0)), 1e-12);
    EXPECT_LE(std::abs(back.amplitude(1) - s.amplitude(1)), 1e-12);
  }
}

TEST(StateVector, InverseBellGateGivesEntangledState) {
  StateVector s = StateVector::all_zeros(2);
  s.apply(Gate::hadamard(1));
  s.apply(Gate::cnot(0, 1));
  const double r = std::numbers::sqrt2 / 2;
  EXPECT_NEAR(std::abs(s.amplitude(0) - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(3) + r), 0.0, 1e-12);
}

TEST(StateVector, InvalidOperandsRejected) {
  StateVector s = StateVector::all_zeros(2);
  EXPECT_THROW(s.apply(Gate::hadamard(2)), std::out_of_range);
  EXPECT_THROW(Gate::cnot(1, 1), std::invalid_argument);
  EXPECT_THROW(Gate::custom("bad", {0}, {1, 1, 0, 1}), std::invalid_argument);
}

TEST(StateVector, CatalogGatesAreUnitary) {
  const Gate gates[] = {Gate::hadamard(0), Gate::cnot(0, 1), Gate::pauli_x(0), Gate::pauli_y(0),
                        Gate::pauli_z(0), Gate::analyzer(0, 0.7), Gate::analyzer(0, -2.9)};
  for (const auto& g : gates) EXPECT_LE(unitarity_error(g.matrix(), g.dimension()), 1e-12) << g.label();
}

TEST(StateVector, ExpectationSimpleCases) {
  const int ket1[] = {1};
  EXPECT_DOUBLE_EQ(expectation(StateVector::basis_state(ket1), OperatorSum(PauliString::parse("Z"))), 1.0);

  StateVector bell = StateVector::all_zeros(2);
  bell.apply(Gate::hadamard(1));
  bell.apply(Gate::cnot(0, 1));
  EXPECT_NEAR(expectation(bell, OperatorSum(PauliString::parse("IX"))), 0.0, 1e-12);
  EXPECT_NEAR(expectation(bell, OperatorSum(PauliString::parse("ZZ"))), 1.0, 1e-12);
}

TEST(StateVector, ExpectationRejectsBadOperands) {
  const StateVector s = StateVector::all_zeros(2);
  EXPECT_THROW(expectation(s, OperatorSum(PauliString::parse("+iZI"))), std::invalid_argument);
  EXPECT_THROW(expectation(s, OperatorSum(PauliString::parse("Z"))), std::invalid_argument);
}

TEST(StateVector, JointProbabilityOnEntangledState) {
  StateVector bell = StateVector::all_zeros(2);
  bell.apply(Gate::hadamard(1));
  bell.apply(Gate::cnot(0, 1));
  const QubitValue both_one[] = {{0, 1}, {1, 1}};
  const QubitValue one_zero[] = {{0, 1}, {1, 0}};
  EXPECT_NEAR(joint_probability(bell, both_one), 0.5, 1e-12);
  EXPECT_NEAR(joint_probability(bell, one_zero), 0.0, 1e-12);
  EXPECT_NEAR(joint_probability(bell, {}), 1.0, 1e-12);
  const QubitValue bad[] = {{2, 1}};
  EXPECT_THROW(joint_probability(bell, bad), std::out_of_range);
}

Gate random_gate(std::mt19937_64& rng, std::size_t width) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const std::size_t q = rng() % width;
  switch (rng() % 6) {
    case 0: return Gate::hadamard(q);
    case 1: return Gate::pauli_x(q);
    case 2: return Gate::pauli_y(q);
    case 3: return Gate::pauli_z(q);
    case 4: return Gate::analyzer(q, angle(rng));
    default: {
      if (width < 2) return Gate::hadamard(q);
      std::size_t c = rng() % (width - 1);
      if (c >= q) ++c;
      return Gate::cnot(q, c);
    }
  }
}

TEST(StateVector, NormPreservedOverRandomGates) {
  std::mt19937_64 rng(31);
  for (std::size_t width = 1; width <= 6; ++width) {
    StateVector s = StateVector::all_zeros(width);
    for (int k = 0; k < 1000; ++k) {
      s.apply(random_gate(rng, width));
      ASSERT_LE(std::abs(s.norm() - 1.0), 1e-10);
    }
  }
}

TEST(StateVector, MatchesDenseUnitaryOracle) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t width = 1 + rng() % 4;
    std::vector<Gate> gates;
    for (int k = 0; k < 10; ++k) gates.push_back(random_gate(rng, width));
    StateVector s = StateVector::all_zeros(width);
    for (const auto& g : gates) s.apply(g);
    const oracle::Vec ref = oracle::circuit_unitary(gates, width) * oracle::all_zeros(width);
    for (std::size_t k = 0; k < s.amplitudes().size(); ++k) {
      EXPECT_LE(std::abs(s.amplitude(k) - ref(static_cast<Eigen::Index>(k))), 1e-12);
    }
  }
}

TEST(StateVector, JointProbabilityEqualsProjectorExpectation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t width = 2 + rng() % 3;
    StateVector s = StateVector::all_zeros(width);
    for (int k = 0; k < 8; ++k) s.apply(random_gate(rng, width));
    std::vector<QubitValue> assignment;
    for (std::size_t q = 0; q < width; ++q) {
      if (rng() % 2) assignment.push_back({q, static_cast<int>(rng() % 2)});
    }
    EXPECT_NEAR(joint_probability(s, assignment), expectation(s, projector(width, assignment)), 1e-12);
  }
}

TEST(StateVector, CsvDump) {
  std::ostringstream out;
  write_state_csv(out, StateVector::all_zeros(1));
  EXPECT_EQ(out.str(), "index,basis,re,im\n0,\"|1>\",0,0\n1,\"|0>\",1,0\n");
}

}  // namespace
}  // namespace heisim
