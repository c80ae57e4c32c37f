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

#include "rslab/rim.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace rslab {

std::vector<RimRow> rim_rows(const SetSystem& sys) {
  if (sys.t() < 2) raise(Errc::TDegenerate, "reduced intersection matrix needs t >= 2");
  const std::size_t last = sys.t() - 1;
  std::vector<RimRow> rows;
  const auto js = sys.derive_J();
  for (std::size_t i = 0; i < sys.n(); ++i) {
    std::vector<std::size_t> blocks;
    for (std::size_t j = 0; j < sys.t(); ++j) {
      if ((js[i] >> j) & 1) blocks.push_back(j);
    }
    for (std::size_t u = 2; u <= blocks.size(); ++u) {
      RimRow r;
      r.element = i;
      r.u = u;
      r.plus_block = blocks[0];
      if (blocks[u - 1] != last) r.minus_block = blocks[u - 1];
      rows.push_back(r);
    }
  }
  return rows;
}

ReducedIntersectionMatrix ReducedIntersectionMatrix::symbolic(const SetSystem& sys, std::size_t k,
                                                              const FieldPtr& field) {
  if (k < 1) raise(Errc::InvalidArgument, "k must be positive");
  ReducedIntersectionMatrix m;
  m.sys_ = sys;
  m.k_ = k;
  m.symbolic_ = true;
  m.meta_ = rim_rows(sys);
  const PolyMatrix g = symbolic_vandermonde(sys.n(), k, field);
  m.poly_ = PolyMatrix(field, g.nvars(), m.meta_.size(), m.cols());
  for (std::size_t r = 0; r < m.meta_.size(); ++r) {
    const RimRow& row = m.meta_[r];
    for (std::size_t c = 0; c < k; ++c) {
      const MultiPoly& e = g(row.element, c);
      m.poly_.set(r, row.plus_block * k + c, e);
      if (row.minus_block) m.poly_.set(r, *row.minus_block * k + c, -e);
    }
  }
  return m;
}

ReducedIntersectionMatrix ReducedIntersectionMatrix::from_generator(const SetSystem& sys, const FieldMatrix& g) {
  if (g.rows() != sys.n()) raise(Errc::ShapeMismatch, "generator must have n rows");
  if (g.cols() < 1) raise(Errc::InvalidArgument, "k must be positive");
  const Field& f = *g.field();
  ReducedIntersectionMatrix m;
  m.sys_ = sys;
  m.k_ = g.cols();
  m.meta_ = rim_rows(sys);
  m.matrix_ = FieldMatrix(g.field(), m.meta_.size(), m.cols());
  for (std::size_t r = 0; r < m.meta_.size(); ++r) {
    const RimRow& row = m.meta_[r];
    for (std::size_t c = 0; c < m.k_; ++c) {
      m.matrix_(r, row.plus_block * m.k_ + c) = g(row.element, c);
      if (row.minus_block) m.matrix_(r, *row.minus_block * m.k_ + c) = f.neg(g(row.element, c));
    }
  }
  return m;
}

ReducedIntersectionMatrix ReducedIntersectionMatrix::evaluated(const SetSystem& sys, std::size_t k,
                                                               const FieldPtr& field,
                                                               std::span<const std::uint64_t> points) {
  if (points.size() != sys.n()) raise(Errc::LengthMismatch, "need one point per ground element");
  return from_generator(sys, vandermonde(field, points, k));
}

const PolyMatrix& ReducedIntersectionMatrix::poly() const {
  if (!symbolic_) raise(Errc::InvalidArgument, "matrix is not symbolic");
  return poly_;
}

const FieldMatrix& ReducedIntersectionMatrix::matrix() const {
  if (symbolic_) raise(Errc::InvalidArgument, "matrix is symbolic");
  return matrix_;
}

ReducedIntersectionMatrix ReducedIntersectionMatrix::delete_rows(Mask b) const {
  RowSelection keep;
  ReducedIntersectionMatrix m;
  m.sys_ = sys_.without(b);
  m.k_ = k_;
  m.symbolic_ = symbolic_;
  for (std::size_t r = 0; r < meta_.size(); ++r) {
    if (!((b >> meta_[r].element) & 1)) {
      keep.push_back(r);
      m.meta_.push_back(meta_[r]);
    }
  }
  if (symbolic_) {
    m.poly_ = poly_.select_rows(keep);
  } else {
    m.matrix_ = matrix_.select_rows(keep);
  }
  return m;
}

ReducedIntersectionMatrix ReducedIntersectionMatrix::evaluate(std::span<const std::uint64_t> points) const {
  if (!symbolic_) raise(Errc::InvalidArgument, "matrix is already evaluated");
  ReducedIntersectionMatrix m = *this;
  m.symbolic_ = false;
  m.matrix_ = poly_.evaluate(points);
  m.poly_ = PolyMatrix();
  return m;
}

std::string ReducedIntersectionMatrix::to_string() const {
  return symbolic_ ? poly_.to_string() : matrix_.to_string();
}

FieldMatrix staircase(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets) {
  const std::size_t rows = h.rows(), l = sets.size();
  if (l < 2) raise(Errc::InvalidArgument, "staircase needs at least two sets");
  std::vector<std::size_t> offset(l, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < l; ++i) {
    offset[i] = total;
    total += sets[i].size();
  }
  FieldMatrix m(h.field(), (l - 1) * rows, total);
  for (std::size_t b = 1; b < l; ++b) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < sets[0].size(); ++c) m((b - 1) * rows + r, offset[0] + c) = h.at(r, sets[0][c]);
      for (std::size_t c = 0; c < sets[b].size(); ++c) m((b - 1) * rows + r, offset[b] + c) = h.at(r, sets[b][c]);
    }
  }
  return m;
}

namespace {

std::vector<std::vector<std::size_t>> complements(const SetSystem& sys) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < sys.t(); ++j) {
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < sys.n(); ++i) {
      if (!sys.contains(j, i)) a.push_back(i);
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

Vec psi_embed(const FieldMatrix& g, const SetSystem& sys, std::span<const std::uint64_t> x) {
  const std::size_t n = sys.n(), t = sys.t(), k = g.cols();
  if (g.rows() != n) raise(Errc::ShapeMismatch, "generator must have n rows");
  if (x.size() != (t - 1) * k) raise(Errc::LengthMismatch, "x must have (t-1)k entries");
  if (sys.union_mask() != sys.ground()) raise(Errc::CoverageViolated, "union of the sets must be [n]");
  const auto r = ReducedIntersectionMatrix::from_generator(sys, g);
  const Vec rx = r.matrix().apply(x);
  if (std::any_of(rx.begin(), rx.end(), [](std::uint64_t v) { return v != 0; })) {
    raise(Errc::NotInKernel, "x is not in the kernel of the reduced intersection matrix");
  }
  const Field& f = *g.field();
  // G x_j for every block, with x_t = 0.
  auto gx = [&](std::size_t j, std::size_t i) -> std::uint64_t {
    if (j + 1 == t) return 0;
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < k; ++c) acc = f.add(acc, f.mul(g(i, c), x[j * k + c]));
    return acc;
  };
  Vec phi(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t first = 0;
    while (!sys.contains(first, i)) ++first;
    phi[i] = gx(first, i);
  }
  Vec out;
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sys.contains(j, i)) continue;
      std::uint64_t y = f.sub(phi[i], gx(j, i));
      out.push_back(j == 0 ? f.neg(y) : y);
    }
  }
  return out;
}

bool verify_psi(const FieldMatrix& g, const FieldMatrix& h, const SetSystem& sys, std::span<const std::uint64_t> x) {
  const Vec image = psi_embed(g, sys, x);
  const FieldMatrix m = staircase(h, complements(sys));
  const Vec mx = m.apply(image);
  const auto nonzero = [](std::uint64_t v) { return v != 0; };
  if (std::any_of(mx.begin(), mx.end(), nonzero)) return false;
  const bool image_zero = !std::any_of(image.begin(), image.end(), nonzero);
  const bool x_zero = !std::any_of(x.begin(), x.end(), nonzero);
  return !image_zero || x_zero;
}

Witness witness_from_violation(const PuncturedRSCode& code, std::span<const std::uint64_t> y,
                               const std::vector<Vec>& codewords, const Rational& lambda) {
  const std::size_t n = code.n(), k = code.k(), count = codewords.size();
  if (y.size() != n) raise(Errc::LengthMismatch, "center length must be n");
  if (count < 2) raise(Errc::NotAViolation, "need at least two codewords");
  if (count > kMaxBlocks) raise(Errc::IndexOutOfRange, "too many codewords");
  std::set<Vec> distinct(codewords.begin(), codewords.end());
  if (distinct.size() != count) raise(Errc::NotAViolation, "codewords are not distinct");

  const FieldMatrix g = code.generator();
  std::vector<Vec> messages;
  std::vector<Mask> agree;
  for (const Vec& c : codewords) {
    if (c.size() != n) raise(Errc::LengthMismatch, "codeword length must be n");
    auto x = solve(g, c);
    if (!x) raise(Errc::NotACodeword, "word is not in the code");
    messages.push_back(std::move(*x));
    Mask m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == y[i]) m |= Mask{1} << i;
    }
    agree.push_back(m);
  }
  const SetSystem all(n, agree);

  // Smallest admissible S by cardinality, then lexicographically; such an S is
  // inclusion-minimal.
  std::optional<std::uint32_t> best;
  std::vector<std::size_t> best_list;
  for (std::size_t size = 2; size <= count && !best; ++size) {
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << count); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
      if (!weight_at_least(all.weight(s), lambda, size - 1, k)) continue;
      std::vector<std::size_t> list;
      for (std::size_t j = 0; j < count; ++j) {
        if ((s >> j) & 1) list.push_back(j);
      }
      if (!best || list < best_list) {
        best = s;
        best_list = std::move(list);
      }
    }
  }
  if (!best) raise(Errc::NoAdmissibleS, "no subset of the codewords has enough agreement weight");

  Witness w;
  w.t = best_list.size();
  w.chosen = best_list;
  w.system = all.restrict_blocks(*best);
  const Field& f = *code.field();
  const Vec& xt = messages[best_list.back()];
  for (std::size_t j = 0; j + 1 < w.t; ++j) {
    const Vec& xj = messages[best_list[j]];
    for (std::size_t c = 0; c < k; ++c) w.kernel_vector.push_back(f.sub(xj[c], xt[c]));
  }
  const auto r = ReducedIntersectionMatrix::from_generator(w.system, g);
  const Vec rv = r.matrix().apply(w.kernel_vector);
  if (std::any_of(rv.begin(), rv.end(), [](std::uint64_t v) { return v != 0; })) {
    raise(Errc::NotInKernel, "witness vector is not in the kernel");
  }
  return w;
}

}  // namespace rslab
