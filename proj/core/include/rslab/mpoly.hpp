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

// Sparse multivariate polynomials over a Field in variables X1..Xn.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rslab/gf.hpp"

namespace rslab {

inline constexpr unsigned kMaxVariables = 16;
inline constexpr unsigned kMaxExponent = 127;

/// Exponent vector packed one byte per variable. Variable 0 occupies the most
/// significant byte of the first word, so comparing words numerically is the
/// lexicographic order with X1 > X2 > ... > X16.
class Monomial {
 public:
  constexpr Monomial() = default;

  unsigned exponent(unsigned var) const noexcept {
    return static_cast<unsigned>((words_[var / 8] >> shift(var)) & 0xFF);
  }
  void set_exponent(unsigned var, unsigned e);
  unsigned total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  Monomial times(const Monomial& other) const;
  Monomial over(const Monomial& divisor) const;  // requires divisor.divides(*this)

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    if (a.words_[0] != b.words_[0]) return a.words_[0] <=> b.words_[0];
    return a.words_[1] <=> b.words_[1];
  }

 private:
  static constexpr unsigned shift(unsigned var) noexcept { return 56 - 8 * (var % 8); }

  std::uint64_t words_[2] = {0, 0};
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial mono;
  std::uint64_t coef = 0;  // canonical field index, never zero inside a MultiPoly
};

/// Binding of variable index (0-based) to a raw field value.
using Assignment = std::vector<std::pair<unsigned, std::uint64_t>>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(FieldPtr field, unsigned nvars);

  static MultiPoly constant(FieldPtr field, unsigned nvars, std::uint64_t value);
  static MultiPoly variable(FieldPtr field, unsigned nvars, unsigned var, unsigned power = 1,
                            std::uint64_t coef = 1);
  /// Builds from arbitrary (possibly repeated or zero) terms.
  static MultiPoly from_terms(FieldPtr field, unsigned nvars, std::vector<Term> terms);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  /// Terms sorted by decreasing graded-lex order; the first is the leading term.
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint64_t constant_value() const;  // requires is_constant()

  /// -1 for the zero polynomial.
  int degree_in(unsigned var) const;
  int total_degree() const noexcept;
  /// Variables that occur in at least one term, increasing.
  std::vector<unsigned> support() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator-(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  MultiPoly& operator+=(const MultiPoly& g) { return *this = *this + g; }
  MultiPoly& operator-=(const MultiPoly& g) { return *this = *this - g; }
  MultiPoly& operator*=(const MultiPoly& g) { return *this = *this * g; }
  MultiPoly scale(std::uint64_t c) const;
  MultiPoly scale(const FieldElement& c) const;

  /// Substitutes the bound variables; the result keeps nvars() but no longer
  /// depends on them.
  MultiPoly partial_assign(const Assignment& bindings) const;
  MultiPoly partial_assign(const std::map<unsigned, FieldElement>& bindings) const;
  /// Full evaluation; point has one raw value per variable.
  std::uint64_t evaluate(std::span<const std::uint64_t> point) const;
  /// Evaluation with coefficients carried into `target`, which must be this
  /// field or an extension of a prime base field.
  std::uint64_t evaluate_in(const Field& target, std::span<const std::uint64_t> point) const;

  friend bool operator==(const MultiPoly& f, const MultiPoly& g);

  /// Canonical text, e.g. "2*X1^2*X3 + 5"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  friend MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);
  void check_compatible(const MultiPoly& g) const;
  void normalize();

  FieldPtr field_;
  unsigned nvars_ = 0;
  std::vector<Term> terms_;
};

/// f / g for g dividing f exactly; raises NotDivisible otherwise.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

enum class ZeroTest { Symbolic, Grid, Randomized };

struct ZeroTestOptions {
  ZeroTest strategy = ZeroTest::Symbolic;
  int degree_bound = -1;      // Grid: bound on the degree in every variable
  unsigned trials = 3;        // Randomized
  std::uint64_t seed = 0x5eed;
};

struct ZeroTestResult {
  bool is_zero = false;
  bool exact = true;
  /// Randomized only: probability that a "zero" verdict is wrong.
  double error_bound = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t eval_field_order = 0;
};

/// Grid: a nonzero polynomial of degree <= d in each variable cannot vanish on
/// S^v for |S| = d+1, so evaluating on the grid over the variables present is
/// exact. Randomized: one-sided, lifting small prime fields to order >= 2^20.
ZeroTestResult is_zero_poly(const MultiPoly& f, const ZeroTestOptions& options = {});

}  // namespace rslab
