// Copyright 2026 The rslab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact arithmetic in GF(p) and GF(p^m).
//
// Elements are stored by their canonical index in [0, q): the residue for
// prime fields, and the base-p packing sum_i c_i p^i of the power-basis
// coefficient vector (c_0, ..., c_{m-1}) for extensions. The index order is
// the canonical element order used for tie-breaking and serialization.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rslab/error.hpp"

namespace rslab {

__extension__ typedef unsigned __int128 detail_u128;

class Rng;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field order accepted by Field::make.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;

/// A value in some Field. Does not own the field: the FieldPtr that created
/// it (held by every container in this library) must outlive the element.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* field, std::uint64_t value) : field_(field), value_(value) {}

  const Field& field() const { return *field_; }
  const Field* field_ptr() const noexcept { return field_; }
  std::uint64_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t exponent) const;
  std::vector<std::uint64_t> coefficients() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  const Field* field_ = nullptr;
  std::uint64_t value_ = 0;
};

class Field {
 public:
  /// Builds GF(p^m). When m > 1 and no modulus is given, the lexicographically
  /// smallest monic irreducible of degree m is used, comparing coefficient
  /// lists from the x^{m-1} coefficient down to the constant term.
  /// The modulus is given low-degree first and must be monic of degree m.
  static FieldPtr make(std::uint64_t p, unsigned m = 1,
                       std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic modulus, low-degree first, length m+1. Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  std::string describe() const;

  bool same_as(const Field& other) const noexcept;

  FieldElement element(std::uint64_t index) const;
  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, 1); }
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const { return FieldElement(this, raw_from_int(v)); }

  // Raw arithmetic on canonical indices. Arguments must already be in [0, q).
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg(std::uint64_t a) const noexcept;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }
  std::uint64_t pow(std::uint64_t a, std::int64_t e) const;
  std::uint64_t raw_from_int(std::int64_t v) const noexcept;

  std::vector<std::uint64_t> digits(std::uint64_t index) const;
  std::uint64_t from_digits(std::span<const std::uint64_t> coeffs) const;

  std::uint64_t random_raw(Rng& rng) const;
  FieldElement random(Rng& rng) const { return FieldElement(this, random_raw(rng)); }

  /// Ordered tuple of n distinct elements, uniform over all such tuples.
  std::vector<std::uint64_t> sample_distinct_raw(std::size_t n, Rng& rng) const;
  std::vector<FieldElement> sample_distinct(std::size_t n, Rng& rng) const;

  bool has_tables() const noexcept { return !exp_.empty(); }

 private:
  Field() = default;

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add_digits(std::uint64_t a, std::uint64_t b, bool subtract) const;
  std::uint64_t inv_slow(std::uint64_t a) const;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned m_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t modulus_bits_ = 0;  // binary extensions: modulus as a bit mask
  // Discrete log tables for q <= 2^20; exp_ has length 2(q-1) so a sum of two
  // logs indexes it without a reduction.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Free-function spelling of Field::make.
inline FieldPtr make_field(std::uint64_t p, unsigned m = 1,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
  return Field::make(p, m, std::move(modulus));
}

/// Returns GF(p^e) for the smallest e with p^e >= min_order, cached per (p, e).
FieldPtr prime_extension(std::uint64_t p, std::uint64_t min_order);

bool is_prime(std::uint64_t n) noexcept;

// ---- inline hot paths -------------------------------------------------------

inline std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const noexcept {
  if (m_ == 1) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, false);
}

inline std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const noexcept {
  if (m_ == 1) return a >= b ? a - b : a + p_ - b;
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, true);
}

inline std::uint64_t Field::neg(std::uint64_t a) const noexcept { return sub(0, a); }

inline std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  if (m_ == 1) {
    return static_cast<std::uint64_t>(static_cast<detail_u128>(a) * b % p_);
  }
  return mul_slow(a, b);
}

}  // namespace rslab
