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

// Dense-matrix reference implementations used only by the tests. Everything
// here works on explicit 2^n x 2^n matrices in the |1>-first ordering, with
// qubit 0 as the leftmost tensor factor.

#include <Eigen/Dense>
#include <random>
#include <span>
#include <vector>

#include "heisim/gate.hpp"
#include "heisim/pauli.hpp"

namespace heisim::oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli_matrix(PauliAxis axis) {
  const Complex i{0.0, 1.0};
  Mat m(2, 2);
  switch (axis) {
    case PauliAxis::I: m << 1, 0, 0, 1; break;
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, -i, i, 0; break;
    case PauliAxis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

inline Mat dense(const PauliString& s) {
  Mat out = pauli_matrix(s.axis(0));
  for (std::size_t q = 1; q < s.width(); ++q) out = kron(out, pauli_matrix(s.axis(q)));
  return s.phase() * out;
}

inline Mat dense(const OperatorSum& op) {
  const Eigen::Index dim = Eigen::Index{1} << op.width();
  Mat out = Mat::Zero(dim, dim);
  for (const auto& t : op.terms()) out += t.coefficient * dense(t.string);
  return out;
}

inline Mat local_matrix(const Gate& g) {
  const auto dim = static_cast<Eigen::Index>(g.dimension());
  Mat m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = g.matrix()[static_cast<std::size_t>(r * dim + c)];
  return m;
}

// Embeds the gate by matching per-qubit values: entry (row, col) is the gate
// entry between the operand values when every other qubit agrees.
inline Mat embed(const Gate& g, std::size_t width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  const Mat local = local_matrix(g);
  const auto ops = g.operands();
  auto digit = [&](Eigen::Index index, std::size_t qubit) {
    return (index >> (width - 1 - qubit)) & 1;
  };
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      bool others_match = true;
      for (std::size_t q = 0; q < width; ++q) {
        if (!g.acts_on(q) && digit(r, q) != digit(c, q)) others_match = false;
      }
      if (!others_match) continue;
      Eigen::Index lr = 0, lc = 0;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        lr = (lr << 1) | digit(r, ops[j]);
        lc = (lc << 1) | digit(c, ops[j]);
      }
      out(r, c) = local(lr, lc);
    }
  }
  return out;
}

inline Mat circuit_unitary(std::span<const Gate> gates, std::size_t width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Mat u = Mat::Identity(dim, dim);
  for (const auto& g : gates) u = embed(g, width) * u;
  return u;
}

inline Vec all_zeros(std::size_t width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Vec v = Vec::Zero(dim);
  v(dim - 1) = 1.0;
  return v;
}

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline PauliString random_string(std::mt19937_64& rng, std::size_t width) {
  std::vector<PauliAxis> axes(width);
  for (auto& a : axes) a = static_cast<PauliAxis>(rng() % 4);
  return PauliString(axes, static_cast<std::uint8_t>(rng() % 4));
}

inline OperatorSum random_sum(std::mt19937_64& rng, std::size_t width, std::size_t terms,
                              bool hermitian = false) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  OperatorSum out(width);
  for (std::size_t k = 0; k < terms; ++k) {
    const Complex c = hermitian ? Complex{coef(rng), 0.0} : Complex{coef(rng), coef(rng)};
    out = out + OperatorSum(random_string(rng, width).unphased(), c);
  }
  return out;
}

}  // namespace heisim::oracle
