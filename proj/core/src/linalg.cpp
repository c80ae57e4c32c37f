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

#include "rslab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "rslab/rng.hpp"

namespace rslab {

using u64 = std::uint64_t;

// ---- FieldMatrix ----------------------------------------------------------------

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) raise(Errc::InvalidArgument, "matrix needs a field");
}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t n) {
  FieldMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  FieldMatrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(Errc::ShapeMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::uint64_t FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) raise(Errc::IndexOutOfRange, "matrix index out of range");
  return data_[r * cols_ + c];
}

void FieldMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  if (r >= rows_ || c >= cols_) raise(Errc::IndexOutOfRange, "matrix index out of range");
  if (value >= field_->order()) raise(Errc::InvalidArgument, "entry out of field range");
  data_[r * cols_ + c] = value;
}

FieldMatrix FieldMatrix::select(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const {
  FieldMatrix m(field_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = at(rs[i], cs[j]);
  }
  return m;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> rs) const {
  std::vector<std::size_t> cs(cols_);
  std::iota(cs.begin(), cs.end(), 0);
  return select(rs, cs);
}

FieldMatrix FieldMatrix::select_cols(std::span<const std::size_t> cs) const {
  std::vector<std::size_t> rs(rows_);
  std::iota(rs.begin(), rs.end(), 0);
  return select(rs, cs);
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec FieldMatrix::apply(std::span<const std::uint64_t> x) const {
  if (x.size() != cols_) raise(Errc::ShapeMismatch, "vector length differs from column count");
  const Field& f = *field_;
  Vec y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    u64 acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul((*this)(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

bool FieldMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](u64 v) { return v == 0; });
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) raise(Errc::ShapeMismatch, "inner dimensions differ");
  if (!a.field_->same_as(*b.field_)) raise(Errc::MixedFields, "matrices over different fields");
  const Field& f = *a.field_;
  FieldMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const u64 x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
    }
  }
  return c;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
         (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
}

std::string FieldMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += std::to_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

// ---- elimination kernels --------------------------------------------------------

namespace detail {

std::size_t echelon(const Field& f, u64* a, std::size_t rows, std::size_t cols,
                    std::vector<std::size_t>* pivots, bool reduce) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(a + p * cols, a + (p + 1) * cols, a + r * cols);
    u64* prow = a + r * cols;
    if (reduce) {
      const u64 inv = f.inv(prow[c]);
      for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
    }
    const u64 inv_pivot = reduce ? 1 : f.inv(prow[c]);
    for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      u64* row = a + i * cols;
      if (row[c] == 0) continue;
      const u64 factor = f.mul(row[c], inv_pivot);
      for (std::size_t j = c; j < cols; ++j) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::uint64_t det_inplace(const Field& f, u64* a, std::size_t n) {
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap_ranges(a + p * n, a + (p + 1) * n, a + c * n);
      det = f.neg(det);
    }
    const u64* prow = a + c * n;
    det = f.mul(det, prow[c]);
    const u64 inv = f.inv(prow[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      u64* row = a + i * n;
      if (row[c] == 0) continue;
      const u64 factor = f.mul(row[c], inv);
      for (std::size_t j = c; j < n; ++j) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
  }
  return det;
}

}  // namespace detail

namespace {

Vec copy_data(const FieldMatrix& m) {
  Vec a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::copy(row.begin(), row.end(), a.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  return a;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  Vec a = copy_data(m);
  return detail::echelon(*m.field(), a.data(), m.rows(), m.cols());
}

std::vector<Vec> kernel(const FieldMatrix& m) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  Vec a = copy_data(m);
  std::vector<std::size_t> pivots;
  const std::size_t rk = detail::echelon(f, a.data(), rows, cols, &pivots, true);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = f.neg(a[i * cols + free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::uint64_t determinant(const FieldMatrix& m) {
  if (m.rows() != m.cols()) raise(Errc::NotSquare, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Vec a = copy_data(m);
  return detail::det_inplace(*m.field(), a.data(), m.rows());
}

std::optional<Vec> solve(const FieldMatrix& m, std::span<const std::uint64_t> b) {
  if (b.size() != m.rows()) raise(Errc::ShapeMismatch, "right-hand side length differs from rows");
  const Field& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols() + 1;
  Vec a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) a[r * cols + c] = m(r, c);
    a[r * cols + cols - 1] = b[r];
  }
  std::vector<std::size_t> pivots;
  const std::size_t rk = detail::echelon(f, a.data(), rows, cols, &pivots, true);
  if (rk > 0 && pivots[rk - 1] == cols - 1) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = a[i * cols + cols - 1];
  return x;
}

std::vector<std::size_t> pivot_columns(const FieldMatrix& m) {
  Vec a = copy_data(m);
  std::vector<std::size_t> pivots;
  detail::echelon(*m.field(), a.data(), m.rows(), m.cols(), &pivots);
  return pivots;
}

// ---- PolyMatrix -----------------------------------------------------------------

PolyMatrix::PolyMatrix(FieldPtr field, unsigned nvars, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), nvars_(nvars), rows_(rows), cols_(cols) {
  data_.assign(rows * cols, MultiPoly(field_, nvars_));
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) raise(Errc::IndexOutOfRange, "matrix index out of range");
  return data_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, MultiPoly value) {
  if (r >= rows_ || c >= cols_) raise(Errc::IndexOutOfRange, "matrix index out of range");
  if (value.nvars() != nvars_ || !value.field() || !value.field()->same_as(*field_)) {
    raise(Errc::MixedContexts, "entry does not share the matrix field and variables");
  }
  data_[r * cols_ + c] = std::move(value);
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> rs) const {
  PolyMatrix m(field_, nvars_, rs.size(), cols_);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] >= rows_) raise(Errc::IndexOutOfRange, "row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) m.data_[i * cols_ + c] = data_[rs[i] * cols_ + c];
  }
  return m;
}

PolyMatrix PolyMatrix::partial_assign(const Assignment& bindings) const {
  PolyMatrix m = *this;
  for (auto& e : m.data_) e = e.partial_assign(bindings);
  return m;
}

FieldMatrix PolyMatrix::evaluate(std::span<const std::uint64_t> point) const {
  return evaluate_in(field_, point);
}

FieldMatrix PolyMatrix::evaluate_in(const FieldPtr& target, std::span<const std::uint64_t> point) const {
  FieldMatrix m(target, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = data_[r * cols_ + c].evaluate_in(*target, point);
  }
  return m;
}

bool PolyMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += " | ";
      out += data_[r * cols_ + c].to_string();
    }
    out += '\n';
  }
  return out;
}

// ---- fraction-free elimination --------------------------------------------------

namespace {

struct BareissResult {
  std::size_t rank = 0;
  bool negate = false;
  MultiPoly last_pivot;
};

// Echelon form over the polynomial ring. Each surviving entry is a minor of
// the input, so every division by the previous pivot is exact.
BareissResult bareiss(std::vector<MultiPoly> a, std::size_t rows, std::size_t cols, const FieldPtr& f,
                      unsigned nvars) {
  BareissResult res;
  MultiPoly prev = MultiPoly::constant(f, nvars, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i * cols + c].is_zero()) continue;
      // Sparser pivots keep intermediate growth down.
      if (p == rows || a[i * cols + c].term_count() < a[p * cols + c].term_count()) p = i;
    }
    if (p == rows) continue;
    if (p != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(p * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((p + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
      res.negate = !res.negate;
    }
    const MultiPoly& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const MultiPoly lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly num = pivot * a[i * cols + j];
        if (!lead.is_zero()) num -= lead * a[r * cols + j];
        a[i * cols + j] = divide_exact(num, prev);
      }
      a[i * cols + c] = MultiPoly(f, nvars);
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

std::vector<MultiPoly> entries(const PolyMatrix& m) {
  std::vector<MultiPoly> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  }
  return out;
}

std::size_t bareiss_rank(const PolyMatrix& m) {
  return bareiss(entries(m), m.rows(), m.cols(), m.field(), m.nvars()).rank;
}

std::vector<u64> random_point(const Field& f, unsigned nvars, Rng& rng) {
  if (nvars <= f.order()) return f.sample_distinct_raw(nvars, rng);
  std::vector<u64> p(nvars);
  for (auto& x : p) x = f.random_raw(rng);
  return p;
}

}  // namespace

MultiPoly det_poly(const PolyMatrix& m) {
  if (m.rows() != m.cols()) raise(Errc::NotSquare, "determinant of a non-square matrix");
  if (m.rows() == 0) return MultiPoly::constant(m.field(), m.nvars(), 1);
  BareissResult res = bareiss(entries(m), m.rows(), m.cols(), m.field(), m.nvars());
  if (res.rank < m.rows()) return MultiPoly(m.field(), m.nvars());
  return res.negate ? -res.last_pivot : res.last_pivot;
}

FieldPtr evaluation_field(const FieldPtr& base) {
  if (base->degree() == 1 && base->order() < (u64{1} << 20)) {
    return prime_extension(base->characteristic(), u64{1} << 20);
  }
  return base;
}

std::size_t rank_symbolic(const PolyMatrix& m, const RankOptions& options) {
  const std::size_t full = std::min(m.rows(), m.cols());
  switch (options.strategy) {
    case RankStrategy::Symbolic:
      return bareiss_rank(m);
    case RankStrategy::RandomizedEval:
    case RankStrategy::Certified: {
      if (full == 0) return 0;
      const FieldPtr ef = evaluation_field(m.field());
      Rng rng(options.seed);
      const unsigned trials = options.strategy == RankStrategy::Certified ? 1 : std::max(1u, options.trials);
      std::size_t best = 0;
      for (unsigned t = 0; t < trials && best < full; ++t) {
        best = std::max(best, rank(m.evaluate_in(ef, random_point(*ef, m.nvars(), rng))));
      }
      if (options.strategy == RankStrategy::RandomizedEval || best == full) return best;
      return bareiss_rank(m);
    }
  }
  return bareiss_rank(m);
}

RowSelection lex_min_nonsingular_rows(const PolyMatrix& m, std::uint64_t seed) {
  const std::size_t l = m.cols();
  const FieldPtr ef = evaluation_field(m.field());
  Rng rng(seed);
  constexpr int kPoints = 3;
  std::vector<FieldMatrix> evals;
  for (int i = 0; i < kPoints; ++i) evals.push_back(m.evaluate_in(ef, random_point(*ef, m.nvars(), rng)));

  RowSelection chosen;
  for (std::size_t i = 0; i < m.rows() && chosen.size() < l; ++i) {
    RowSelection cand = chosen;
    cand.push_back(i);
    bool independent = false;
    for (const FieldMatrix& e : evals) {
      if (rank(e.select_rows(cand)) == cand.size()) {
        independent = true;
        break;
      }
    }
    // Evaluations only certify independence; dependence needs the ring.
    if (!independent) independent = bareiss_rank(m.select_rows(cand)) == cand.size();
    if (independent) chosen = std::move(cand);
  }
  if (chosen.size() < l) raise(Errc::NotFullColumnRank, "matrix does not have full column rank");
  return chosen;
}

// ---- intersection dimensions ----------------------------------------------------

namespace {

void check_sets(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.empty()) raise(Errc::InvalidArgument, "need at least one column set");
  for (const auto& a : sets) {
    for (std::size_t c : a) {
      if (c >= h.cols()) raise(Errc::IndexOutOfRange, "column index out of range");
    }
  }
}

// Columns of H_A reduced to a basis, as a k x d matrix.
FieldMatrix span_basis(const FieldMatrix& h, std::span<const std::size_t> cols) {
  FieldMatrix sub = h.select_cols(cols);
  return sub.select_cols(pivot_columns(sub));
}

}  // namespace

std::size_t intersection_dim_direct(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets) {
  check_sets(h, sets);
  const Field& f = *h.field();
  const std::size_t k = h.rows();
  FieldMatrix u = span_basis(h, sets[0]);
  for (std::size_t s = 1; s < sets.size() && u.cols() > 0; ++s) {
    FieldMatrix w = span_basis(h, sets[s]);
    const std::size_t du = u.cols(), dw = w.cols();
    // Ker [U | -W] pairs (a, b) with Ua = Wb; the images Ua span U cap W.
    FieldMatrix joint(h.field(), k, du + dw);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < du; ++c) joint(r, c) = u(r, c);
      for (std::size_t c = 0; c < dw; ++c) joint(r, du + c) = f.neg(w(r, c));
    }
    std::vector<Vec> ker = kernel(joint);
    FieldMatrix images(h.field(), k, ker.size());
    for (std::size_t v = 0; v < ker.size(); ++v) {
      Vec img = u.apply(std::span<const u64>(ker[v].data(), du));
      for (std::size_t r = 0; r < k; ++r) images(r, v) = img[r];
    }
    u = images.select_cols(pivot_columns(images));
  }
  return u.cols();
}

std::size_t intersection_dim_block(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets) {
  check_sets(h, sets);
  const std::size_t k = h.rows(), l = sets.size();
  std::size_t total_cols = 0, dims = 0;
  std::vector<std::size_t> offset(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    offset[i] = total_cols;
    total_cols += sets[i].size();
    dims += rank(h.select_cols(sets[i]));
  }
  FieldMatrix block(h.field(), (l - 1) * k, total_cols);
  for (std::size_t b = 1; b < l; ++b) {
    for (std::size_t r = 0; r < k; ++r) {
      const std::size_t row = (b - 1) * k + r;
      for (std::size_t c = 0; c < sets[0].size(); ++c) block(row, offset[0] + c) = h(r, sets[0][c]);
      for (std::size_t c = 0; c < sets[b].size(); ++c) block(row, offset[b] + c) = h(r, sets[b][c]);
    }
  }
  return dims - rank(block);
}

std::size_t intersection_dim(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets) {
  const std::size_t direct = intersection_dim_direct(h, sets);
  const std::size_t block = intersection_dim_block(h, sets);
  if (direct != block) {
    raise(Errc::MethodMismatch, "intersection dimension: direct " + std::to_string(direct) + " vs block " +
                                    std::to_string(block));
  }
  return direct;
}

std::int64_t partition_formula(const std::vector<std::vector<std::size_t>>& sets, std::size_t k,
                               std::size_t max_sets) {
  const std::size_t l = sets.size();
  if (l == 0) raise(Errc::InvalidArgument, "need at least one set");
  if (l > max_sets) raise(Errc::TooManyBlocks, "too many sets for exhaustive partition enumeration");
  std::vector<std::vector<std::size_t>> sorted = sets;
  for (auto& a : sorted) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.size() > k) raise(Errc::InvalidArgument, "set larger than k");
  }
  std::int64_t best = 0;
  bool first = true;
  for_each_set_partition(l, [&](const std::vector<std::size_t>& rgs, std::size_t blocks) {
    std::int64_t total = -static_cast<std::int64_t>((blocks - 1) * k);
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<std::size_t> acc;
      bool started = false;
      for (std::size_t j = 0; j < l; ++j) {
        if (rgs[j] != b) continue;
        if (!started) {
          acc = sorted[j];
          started = true;
        } else {
          std::vector<std::size_t> next;
          std::set_intersection(acc.begin(), acc.end(), sorted[j].begin(), sorted[j].end(),
                                std::back_inserter(next));
          acc = std::move(next);
        }
      }
      total += static_cast<std::int64_t>(acc.size());
    }
    if (first || total > best) best = total;
    first = false;
  });
  return best;
}

}  // namespace rslab
