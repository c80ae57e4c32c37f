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

// Exact dense linear algebra over a Field and over its polynomial ring.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rslab/gf.hpp"
#include "rslab/mpoly.hpp"

namespace rslab {

/// Strictly increasing 0-based row indices.
using RowSelection = std::vector<std::size_t>;
using Vec = std::vector<std::uint64_t>;

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(FieldPtr field, std::size_t n);
  static FieldMatrix from_rows(FieldPtr field, const std::vector<Vec>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint64_t value);
  FieldElement element(std::size_t r, std::size_t c) const { return FieldElement(field_.get(), at(r, c)); }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  FieldMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  FieldMatrix select_rows(std::span<const std::size_t> rows) const;
  FieldMatrix select_cols(std::span<const std::size_t> cols) const;
  FieldMatrix transpose() const;
  Vec apply(std::span<const std::uint64_t> x) const;
  bool is_zero() const noexcept;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

std::size_t rank(const FieldMatrix& m);
/// Basis of the right kernel {x : Mx = 0}; its size is cols - rank.
std::vector<Vec> kernel(const FieldMatrix& m);
std::uint64_t determinant(const FieldMatrix& m);
/// Some x with Mx = b, or nothing when the system is inconsistent.
std::optional<Vec> solve(const FieldMatrix& m, std::span<const std::uint64_t> b);
/// Indices of a column basis, greedy from the left.
std::vector<std::size_t> pivot_columns(const FieldMatrix& m);

// Low-level kernels on a row-major buffer, shared by the hot paths elsewhere.
namespace detail {
/// In-place row echelon form (reduced and normalized when `reduce`); returns
/// the rank and optionally the pivot column of each echelon row.
std::size_t echelon(const Field& f, std::uint64_t* a, std::size_t rows, std::size_t cols,
                    std::vector<std::size_t>* pivots = nullptr, bool reduce = false);
std::uint64_t det_inplace(const Field& f, std::uint64_t* a, std::size_t n);
}  // namespace detail

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(FieldPtr field, unsigned nvars, std::size_t rows, std::size_t cols);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const MultiPoly& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, MultiPoly value);

  PolyMatrix select_rows(std::span<const std::size_t> rows) const;
  PolyMatrix partial_assign(const Assignment& bindings) const;
  FieldMatrix evaluate(std::span<const std::uint64_t> point) const;
  /// Evaluation carrying coefficients into an extension of a prime base field.
  FieldMatrix evaluate_in(const FieldPtr& target, std::span<const std::uint64_t> point) const;
  bool is_zero() const noexcept;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// One line per row, entries in canonical polynomial text separated by " | ".
  std::string to_string() const;

 private:
  FieldPtr field_;
  unsigned nvars_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
MultiPoly det_poly(const PolyMatrix& m);

enum class RankStrategy {
  Symbolic,        // fraction-free elimination over the polynomial ring
  RandomizedEval,  // max rank over random evaluations; never exceeds the true rank
  Certified,       // exact: a full-rank evaluation is a proof, else Symbolic
};

struct RankOptions {
  RankStrategy strategy = RankStrategy::Symbolic;
  unsigned trials = 3;
  std::uint64_t seed = 0x7a11;
};

std::size_t rank_symbolic(const PolyMatrix& m, const RankOptions& options = {});

/// The field used for random evaluation of matrices over `base`: an extension
/// of order >= 2^20 for small prime fields, otherwise `base` itself.
FieldPtr evaluation_field(const FieldPtr& base);

/// Lexicographically smallest set of cols() rows whose submatrix is
/// nonsingular over the function field, by the matroid greedy scan.
RowSelection lex_min_nonsingular_rows(const PolyMatrix& m, std::uint64_t seed = 0x1e5);

/// dim of the intersection of the column spans of H restricted to each A_i,
/// computed by iterated kernels and by the block-matrix rank identity.
std::size_t intersection_dim(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets);
std::size_t intersection_dim_direct(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets);
std::size_t intersection_dim_block(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets);

inline constexpr std::size_t kMaxPartitionBlocks = 10;

/// max over set partitions P_1..P_s of [l] of sum_i |cap_{j in P_i} A_j| - (s-1)k.
std::int64_t partition_formula(const std::vector<std::vector<std::size_t>>& sets, std::size_t k,
                               std::size_t max_sets = kMaxPartitionBlocks);

/// Calls visit(rgs, blocks) for every restricted growth string of length l,
/// in lexicographic order.
template <typename Visit>
void for_each_set_partition(std::size_t l, Visit&& visit) {
  if (l == 0) {
    std::vector<std::size_t> empty;
    visit(empty, std::size_t{0});
    return;
  }
  std::vector<std::size_t> a(l, 0), maxv(l, 0);  // maxv[i] = max(a[0..i-1])
  for (;;) {
    std::size_t blocks = 0;
    for (std::size_t x : a) blocks = std::max(blocks, x + 1);
    visit(a, blocks);
    std::size_t i = l - 1;
    while (i > 0 && a[i] == maxv[i] + 1) --i;
    if (i == 0) return;
    ++a[i];
    for (std::size_t j = i + 1; j < l; ++j) {
      a[j] = 0;
      maxv[j] = std::max(maxv[j - 1], a[j - 1]);
    }
  }
}

}  // namespace rslab
