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

#include "heisim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace heisim {

namespace {

void require_same_width(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": width mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

std::uint64_t width_mask(std::size_t width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

// Multiplies c by i^k without rounding.
Complex times_i_power(Complex c, unsigned k) {
  switch (k & 3U) {
    case 0: return c;
    case 1: return {-c.imag(), c.real()};
    case 2: return {-c.real(), -c.imag()};
    default: return {c.imag(), -c.real()};
  }
}

// Exponent of i picked up by the per-qubit products in a*b.
unsigned product_phase(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2, std::uint64_t z2) {
  const std::uint64_t ax = x1 & ~z1, ay = x1 & z1, az = ~x1 & z1;
  const std::uint64_t bx = x2 & ~z2, by = x2 & z2, bz = ~x2 & z2;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  const std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
  const std::uint64_t minus = (ay & bx) | (az & by) | (ax & bz);
  return static_cast<unsigned>(std::popcount(plus) + 3 * std::popcount(minus)) & 3U;
}

unsigned axis_code(std::uint64_t x, std::uint64_t z, int q) {
  const bool xb = (x >> q) & 1U, zb = (z >> q) & 1U;
  if (xb) return zb ? 2 : 1;
  return zb ? 3 : 0;
}

bool key_less(std::uint64_t ax, std::uint64_t az, std::uint64_t bx, std::uint64_t bz) {
  const std::uint64_t diff = (ax ^ bx) | (az ^ bz);
  if (diff == 0) return false;
  const int q = std::countr_zero(diff);
  return axis_code(ax, az, q) < axis_code(bx, bz, q);
}

struct Key {
  std::uint64_t x;
  std::uint64_t z;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ULL;
    h ^= k.z + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

char axis_symbol(PauliAxis axis) {
  static constexpr char kSymbols[] = {'I', 'X', 'Y', 'Z'};
  return kSymbols[static_cast<int>(axis) & 3];
}

PauliString::PauliString(std::size_t width) : PauliString(width, 0, 0, 0) {}

PauliString::PauliString(std::size_t width, std::uint64_t x, std::uint64_t z, std::uint8_t phase)
    : width_(width), x_(x), z_(z), phase_(static_cast<std::uint8_t>(phase & 3U)) {
  if (width == 0 || width > kMaxPauliWidth) {
    throw std::invalid_argument("PauliString width must be in [1, 64], got " +
                                std::to_string(width));
  }
}

PauliString::PauliString(std::span<const PauliAxis> axes, std::uint8_t phase_exponent)
    : PauliString(axes.size(), 0, 0, phase_exponent) {
  for (std::size_t q = 0; q < axes.size(); ++q) {
    const auto code = static_cast<unsigned>(axes[q]);
    if (code == 1 || code == 2) x_ |= std::uint64_t{1} << q;
    if (code == 2 || code == 3) z_ |= std::uint64_t{1} << q;
  }
}

PauliString PauliString::single(std::size_t width, std::size_t qubit, PauliAxis axis) {
  if (qubit >= width) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside width " +
                            std::to_string(width));
  }
  return PauliString(width).with_axis(qubit, axis);
}

PauliString PauliString::parse(std::string_view text) {
  std::uint8_t phase = 0;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_spaces();
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase = static_cast<std::uint8_t>(phase + 1);
      ++pos;
    }
  }
  std::vector<PauliAxis> axes;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': axes.push_back(PauliAxis::I); break;
      case 'X': axes.push_back(PauliAxis::X); break;
      case 'Y': axes.push_back(PauliAxis::Y); break;
      case 'Z': axes.push_back(PauliAxis::Z); break;
      case ' ': break;
      default:
        throw std::invalid_argument("unexpected character in Pauli string: '" +
                                    std::string(text) + "'");
    }
  }
  return PauliString(axes, phase);
}

PauliAxis PauliString::axis(std::size_t qubit) const {
  if (qubit >= width_) throw std::out_of_range("qubit index outside string width");
  return static_cast<PauliAxis>(axis_code(x_, z_, static_cast<int>(qubit)));
}

std::vector<PauliAxis> PauliString::axes() const {
  std::vector<PauliAxis> out(width_);
  for (std::size_t q = 0; q < width_; ++q) out[q] = axis(q);
  return out;
}

Complex PauliString::phase() const { return times_i_power(1.0, phase_); }

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(support_mask()));
}

PauliString PauliString::with_axis(std::size_t qubit, PauliAxis axis) const {
  if (qubit >= width_) throw std::out_of_range("qubit index outside string width");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const auto code = static_cast<unsigned>(axis);
  PauliString out = *this;
  out.x_ = (code == 1 || code == 2) ? (x_ | bit) : (x_ & ~bit);
  out.z_ = (code == 2 || code == 3) ? (z_ | bit) : (z_ & ~bit);
  return out;
}

PauliString PauliString::with_phase(std::uint8_t phase_exponent) const {
  return PauliString(width_, x_, z_, phase_exponent);
}

std::string PauliString::to_string() const {
  static constexpr const char* kPhases[] = {"+1", "+i", "-1", "-i"};
  std::string out = kPhases[phase_];
  out += " *";
  if (is_identity()) return out + " I";
  for (std::size_t q = 0; q < width_; ++q) {
    const PauliAxis a = axis(q);
    if (a == PauliAxis::I) continue;
    out += ' ';
    out += axis_symbol(a);
    out += std::to_string(q + 1);
  }
  return out;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.width_ != b.width_) return a.width_ < b.width_;
  if (key_less(a.x_, a.z_, b.x_, b.z_)) return true;
  if (key_less(b.x_, b.z_, a.x_, a.z_)) return false;
  return a.phase_ < b.phase_;
}

PauliString multiply_strings(const PauliString& a, const PauliString& b) {
  require_same_width(a.width_, b.width_, "multiply_strings");
  const unsigned phase = a.phase_ + b.phase_ + product_phase(a.x_, a.z_, b.x_, b.z_);
  return PauliString(a.width_, a.x_ ^ b.x_, a.z_ ^ b.z_, static_cast<std::uint8_t>(phase & 3U));
}

// OperatorSum

OperatorSum::OperatorSum(std::size_t width) : width_(width) {
  if (width == 0 || width > kMaxPauliWidth) {
    throw std::invalid_argument("OperatorSum width must be in [1, 64], got " +
                                std::to_string(width));
  }
}

OperatorSum::OperatorSum(const PauliString& s, Complex coefficient) : OperatorSum(s.width()) {
  terms_.push_back({s.unphased(), times_i_power(coefficient, s.phase_exponent())});
  canonicalize();
}

OperatorSum OperatorSum::identity(std::size_t width) { return OperatorSum(PauliString(width)); }

OperatorSum OperatorSum::from_terms(std::size_t width,
                                    std::span<const std::pair<PauliString, Complex>> terms) {
  OperatorSum out(width);
  for (const auto& [s, c] : terms) {
    require_same_width(width, s.width(), "OperatorSum::from_terms");
    out.terms_.push_back({s.unphased(), times_i_power(c, s.phase_exponent())});
  }
  out.canonicalize();
  return out;
}

void OperatorSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.string < b.string; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().string == t.string) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return std::abs(t.coefficient) < kPruneTolerance; });
  terms_ = std::move(merged);
}

Complex OperatorSum::coefficient(const PauliString& s) const {
  const PauliString key = s.unphased();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const PauliString& k) { return t.string < k; });
  if (it == terms_.end() || !(it->string == key)) return 0.0;
  return times_i_power(it->coefficient, s.phase_exponent());
}

std::uint64_t OperatorSum::support_mask() const {
  std::uint64_t mask = 0;
  for (const auto& t : terms_) mask |= t.string.support_mask();
  return mask;
}

double OperatorSum::max_imaginary() const {
  double worst = 0.0;
  for (const auto& t : terms_) worst = std::max(worst, std::abs(t.coefficient.imag()));
  return worst;
}

OperatorSum OperatorSum::scaled(Complex factor) const {
  OperatorSum out(width_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient *= factor;
  std::erase_if(out.terms_,
                [](const Term& t) { return std::abs(t.coefficient) < kPruneTolerance; });
  return out;
}

double OperatorSum::max_deviation(const OperatorSum& other) const {
  require_same_width(width_, other.width_, "OperatorSum::max_deviation");
  double worst = 0.0;
  for (const auto& t : terms_) {
    worst = std::max(worst, std::abs(t.coefficient - other.coefficient(t.string)));
  }
  for (const auto& t : other.terms_) {
    worst = std::max(worst, std::abs(t.coefficient - coefficient(t.string)));
  }
  return worst;
}

std::string format_coefficient(Complex c) {
  char buf[96];
  if (std::abs(c.imag()) < OperatorSum::kPruneTolerance) {
    std::snprintf(buf, sizeof buf, "%+.6f", c.real());
  } else if (std::abs(c.real()) < OperatorSum::kPruneTolerance) {
    std::snprintf(buf, sizeof buf, "%+.6fi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "+(%.6f%+.6fi)", c.real(), c.imag());
  }
  return buf;
}

std::string OperatorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ' ';
    // Drop the "+1 *" prefix of the phase-free string rendering.
    out += format_coefficient(t.coefficient) + t.string.to_string().substr(2);
  }
  return out;
}

OperatorSum sum_add(const OperatorSum& a, const OperatorSum& b) {
  require_same_width(a.width_, b.width_, "sum_add");
  OperatorSum out(a.width_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  out.terms_.insert(out.terms_.end(), a.terms_.begin(), a.terms_.end());
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  out.canonicalize();
  return out;
}

OperatorSum sum_multiply(const OperatorSum& a, const OperatorSum& b) {
  require_same_width(a.width_, b.width_, "sum_multiply");
  std::unordered_map<Key, Complex, KeyHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const std::uint64_t ax = ta.string.x_mask(), az = ta.string.z_mask();
      const std::uint64_t bx = tb.string.x_mask(), bz = tb.string.z_mask();
      const Complex c = times_i_power(ta.coefficient * tb.coefficient, product_phase(ax, az, bx, bz));
      acc[Key{ax ^ bx, az ^ bz}] += c;
    }
  }
  OperatorSum out(a.width_);
  out.terms_.reserve(acc.size());
  for (const auto& [k, c] : acc) out.terms_.push_back({PauliString(a.width_, k.x, k.z, 0), c});
  out.canonicalize();
  return out;
}

Complex expectation_in_all_zeros(const OperatorSum& op) {
  Complex total = 0.0;
  const std::uint64_t mask = width_mask(op.width());
  for (const auto& t : op.terms()) {
    if (t.string.x_mask() != 0) continue;
    const int z_count = std::popcount(t.string.z_mask() & mask);
    total += (z_count % 2 == 0) ? t.coefficient : -t.coefficient;
  }
  return total;
}

OperatorSum projector(std::size_t width, std::span<const QubitValue> assignment) {
  OperatorSum out = OperatorSum::identity(width);
  for (const auto& [qubit, value] : assignment) {
    if (value != 0 && value != 1) throw std::invalid_argument("qubit value must be 0 or 1");
    const OperatorSum factor =
        OperatorSum(PauliString(width), 0.5) +
        OperatorSum(PauliString::single(width, qubit, PauliAxis::Z), value == 1 ? 0.5 : -0.5);
    out = out * factor;
  }
  return out;
}

}  // namespace heisim
