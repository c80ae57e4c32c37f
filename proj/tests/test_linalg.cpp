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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "rslab/linalg.hpp"
#include "rslab/rng.hpp"
#include "rslab/rscode.hpp"
#include "test_util.hpp"

namespace rslab {
namespace {

FieldMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, Rng& rng) {
  FieldMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f->random_raw(rng);
  return m;
}

TEST(Linalg, RankAndKernel) {
  auto f = make_field(7);
  auto id = FieldMatrix::identity(f, 3);
  EXPECT_EQ(rank(id), 3u);
  EXPECT_TRUE(kernel(id).empty());
  FieldMatrix z(f, 2, 3);
  EXPECT_EQ(rank(z), 0u);
  EXPECT_EQ(kernel(z).size(), 3u);
  const Vec pts{1, 2, 3};
  auto v = vandermonde(f, pts, 3);
  EXPECT_EQ(rank(v), 3u);
  EXPECT_EQ(determinant(v), 2u);
  EXPECT_ERRC(determinant(FieldMatrix(f, 2, 3)), Errc::NotSquare);
}

TEST(Linalg, KernelVectorsAreInKernel) {
  auto f = make_field(5);
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.uniform(5), c = 1 + rng.uniform(6);
    FieldMatrix m = random_matrix(f, r, c, rng);
    if (rng.bernoulli(1, 2) && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);  // force a dependency
    }
    const auto ker = kernel(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const Vec& x : ker) {
      for (std::uint64_t y : m.apply(x)) EXPECT_EQ(y, 0u);
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Linalg, Solve) {
  auto f = make_field(11);
  auto m = FieldMatrix::from_rows(f, {{1, 2}, {3, 4}});
  auto x = solve(m, Vec{5, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ(m.apply(*x), (Vec{5, 6}));
  auto sing = FieldMatrix::from_rows(f, {{1, 2}, {2, 4}});
  EXPECT_FALSE(solve(sing, Vec{1, 0}));
}

TEST(Linalg, DetPoly) {
  auto f = make_field(7);
  auto v = symbolic_vandermonde(2, 2, f);
  EXPECT_EQ(det_poly(v), MultiPoly::variable(f, 2, 1) - MultiPoly::variable(f, 2, 0));
  PolyMatrix d(f, 2, 2, 2);
  d.set(0, 0, MultiPoly::variable(f, 2, 0));
  d.set(1, 1, MultiPoly::variable(f, 2, 1));
  EXPECT_EQ(det_poly(d), MultiPoly::variable(f, 2, 0) * MultiPoly::variable(f, 2, 1));
  EXPECT_ERRC(det_poly(PolyMatrix(f, 2, 2, 3)), Errc::NotSquare);
}

TEST(Linalg, DetPolyMatchesEvaluation) {
  auto f = make_field(101);
  auto v = symbolic_vandermonde(4, 4, f);
  const MultiPoly det = det_poly(v);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    Vec pt;
    for (int j = 0; j < 4; ++j) pt.push_back(f->random_raw(rng));
    EXPECT_EQ(det.evaluate(pt), determinant(v.evaluate(pt)));
  }
}

TEST(Linalg, RankSymbolic) {
  auto f = make_field(7);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto v = symbolic_vandermonde(5, k, f);
    for (auto s : {RankStrategy::Symbolic, RankStrategy::RandomizedEval, RankStrategy::Certified})
      EXPECT_EQ(rank_symbolic(v, {s}), k);
  }
  EXPECT_EQ(rank_symbolic(PolyMatrix(f, 2, 3, 3)), 0u);
  // (X1, X1) over (X2, X2) has rank 1 although every entry is nonzero.
  PolyMatrix m(f, 2, 2, 2);
  m.set(0, 0, MultiPoly::variable(f, 2, 0));
  m.set(0, 1, MultiPoly::variable(f, 2, 0));
  m.set(1, 0, MultiPoly::variable(f, 2, 1));
  m.set(1, 1, MultiPoly::variable(f, 2, 1));
  EXPECT_EQ(rank_symbolic(m, {RankStrategy::Certified}), 1u);
}

TEST(Linalg, LexMinExamples) {
  auto f = make_field(7);
  PolyMatrix m(f, 1, 3, 2);  // zero row, then I_2
  m.set(1, 0, MultiPoly::constant(f, 1, 1));
  m.set(2, 1, MultiPoly::constant(f, 1, 1));
  EXPECT_EQ(lex_min_nonsingular_rows(m), (RowSelection{1, 2}));
  PolyMatrix s(f, 1, 4, 2);  // I_2 over anything
  s.set(0, 0, MultiPoly::constant(f, 1, 1));
  s.set(1, 1, MultiPoly::constant(f, 1, 1));
  s.set(2, 0, MultiPoly::variable(f, 1, 0));
  s.set(3, 1, MultiPoly::variable(f, 1, 0));
  EXPECT_EQ(lex_min_nonsingular_rows(s), (RowSelection{0, 1}));
  EXPECT_ERRC(lex_min_nonsingular_rows(PolyMatrix(f, 1, 3, 2)), Errc::NotFullColumnRank);
}

// Greedy selection equals the first nonsingular l-subset in lexicographic order.
TEST(Linalg, LexMinAgreesWithExhaustive) {
  auto f = make_field(5);
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 3 + rng.uniform(3), l = 2 + rng.uniform(2);
    PolyMatrix m(f, 2, rows, l);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        const auto kind = rng.uniform(4);
        if (kind == 0) continue;
        MultiPoly e = kind == 1 ? MultiPoly::constant(f, 2, 1 + rng.uniform(4))
                                : MultiPoly::variable(f, 2, kind - 2, 1 + static_cast<unsigned>(rng.uniform(2)));
        m.set(i, j, e);
      }
    }
    std::optional<RowSelection> want;
    std::vector<bool> pick(rows, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
    do {
      RowSelection sel;
      for (std::size_t i = 0; i < rows; ++i)
        if (pick[i]) sel.push_back(i);
      if (!det_poly(m.select_rows(sel)).is_zero()) {
        want = sel;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (want) {
      EXPECT_EQ(lex_min_nonsingular_rows(m), *want);
    } else {
      EXPECT_ERRC(lex_min_nonsingular_rows(m), Errc::NotFullColumnRank);
    }
  }
}

TEST(Linalg, IntersectionDimExamples) {
  auto f3 = make_field(3);
  auto id = FieldMatrix::identity(f3, 2);
  EXPECT_EQ(intersection_dim(id, {{0}, {1}}), 0u);
  auto f = make_field(65537);
  Rng rng(4);
  FieldMatrix h = random_matrix(f, 2, 5, rng);
  EXPECT_EQ(intersection_dim(h, {{0, 1}, {0, 1}}), 2u);
  EXPECT_ERRC(intersection_dim(h, {{9}}), Errc::IndexOutOfRange);
}

TEST(Linalg, IntersectionMethodsAgree) {
  auto f = make_field(3);  // small field so that degenerate instances occur
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng.uniform(4), n = 2 + rng.uniform(7), l = 1 + rng.uniform(4);
    FieldMatrix h = random_matrix(f, k, n, rng);
    std::vector<std::vector<std::size_t>> sets(l);
    for (auto& a : sets)
      for (std::size_t c = 0; c < n; ++c)
        if (rng.bernoulli(1, 2)) a.push_back(c);
    EXPECT_EQ(intersection_dim_direct(h, sets), intersection_dim_block(h, sets));
  }
}

TEST(Linalg, PartitionFormula) {
  EXPECT_EQ(partition_formula({{0, 1}, {1, 2}}, 2), 2);
  EXPECT_EQ(partition_formula({{0, 2, 4}}, 3), 3);
  // Three equal sets: merging everything beats singletons.
  EXPECT_EQ(partition_formula({{0, 1}, {0, 1}, {0, 1}}, 2), 2);
  std::vector<std::vector<std::size_t>> many(11, std::vector<std::size_t>{0});
  EXPECT_ERRC(partition_formula(many, 1), Errc::TooManyBlocks);
}

TEST(Linalg, SetPartitionsCountBell) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t l = 0; l <= 6; ++l) {
    std::size_t count = 0;
    for_each_set_partition(l, [&](const std::vector<std::size_t>&, std::size_t) { ++count; });
    EXPECT_EQ(count, bell[l]);
  }
}

}  // namespace
}  // namespace rslab
