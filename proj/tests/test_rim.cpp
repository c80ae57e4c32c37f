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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "rslab/oracle.hpp"
#include "rslab/rim.hpp"
#include "rslab/rng.hpp"
#include "rslab/rscode.hpp"
#include "test_util.hpp"

namespace rslab {
namespace {

SetSystem example() { return SetSystem::from_lists(6, {{1, 3, 4}, {1, 4, 5}, {2, 3, 4, 5}, {1, 2, 4, 6}}); }

SetSystem random_system(std::size_t n, std::size_t t, Rng& rng, bool cover = false) {
  std::vector<Mask> sets(t);
  for (auto& s : sets) s = rng.uniform(Mask{1} << n);
  if (cover) {
    for (std::size_t i = 0; i < n; ++i)
      if (!((sets[0] | sets[t - 1]) >> i & 1)) sets[rng.uniform(t)] |= Mask{1} << i;
  }
  return SetSystem(n, sets);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Rim, ExampleMatrixMatchesGolden) {
  auto f = make_field(7);
  const auto r = ReducedIntersectionMatrix::symbolic(example(), 3, f);
  EXPECT_EQ(r.rows(), 8u);
  EXPECT_EQ(r.cols(), 9u);
  const PolyMatrix& p = r.poly();
  const MultiPoly x1 = MultiPoly::variable(f, 6, 0), one = MultiPoly::constant(f, 6, 1);
  const std::vector<MultiPoly> row0{one, x1, x1 * x1, -one, -x1, -(x1 * x1), {}, {}, {}};
  for (std::size_t c = 0; c < 9; ++c) {
    if (row0[c].field()) {
      EXPECT_EQ(p.at(0, c), row0[c]) << c;
    } else {
      EXPECT_TRUE(p.at(0, c).is_zero()) << c;
    }
  }
  // Row 3 comes from element 2 with J_2 = {3, 4}; block 4 is last, so no minus block.
  EXPECT_EQ(r.row_info()[2], (RimRow{1, 2, 2, std::nullopt}));
  EXPECT_EQ(p.at(2, 7), MultiPoly::variable(f, 6, 1));
  EXPECT_EQ(r.to_string(), slurp(std::string(RSLAB_GOLDEN_DIR) + "/rim_example.txt"));
}

TEST(Rim, StructuralInvariants) {
  auto f = make_field(11);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.uniform(7), t = 2 + rng.uniform(3), k = 1 + rng.uniform(3);
    const SetSystem s = random_system(n, t, rng);
    const auto r = ReducedIntersectionMatrix::symbolic(s, k, f);
    ASSERT_EQ(r.rows(), s.weight());
    ASSERT_EQ(r.cols(), (t - 1) * k);
    std::vector<std::size_t> per_var(n, 0);
    for (std::size_t row = 0; row < r.rows(); ++row) {
      const RimRow& info = r.row_info()[row];
      if (row) {
        const RimRow& prev = r.row_info()[row - 1];
        EXPECT_TRUE(std::pair(prev.element, prev.u) < std::pair(info.element, info.u));
      }
      std::size_t plus = 0, minus = 0;
      for (std::size_t b = 0; b + 1 < t; ++b) {
        const MultiPoly& lead = r.poly().at(row, b * k);
        if (lead.is_zero()) continue;
        (lead.constant_value() == 1 ? plus : minus) += 1;
        for (std::size_t c = 0; c < k; ++c) {
          const MultiPoly& e = r.poly().at(row, b * k + c);
          for (unsigned v = 0; v < n; ++v)
            if (v != info.element) EXPECT_LE(e.degree_in(v), 0);
        }
      }
      EXPECT_EQ(plus, 1u);
      EXPECT_EQ(minus, info.minus_block ? 1u : 0u);
      ++per_var[info.element];
    }
    const auto js = s.derive_J();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t want = std::popcount(js[i]) >= 2 ? std::popcount(js[i]) - 1 : 0;
      EXPECT_EQ(per_var[i], want);
      EXPECT_LE(per_var[i], t - 1);
    }
    // Deleting rows equals building on I \ B; evaluation commutes with construction.
    const Mask b = rng.uniform(s.ground() + 1);
    const auto d = r.delete_rows(b);
    const auto direct = ReducedIntersectionMatrix::symbolic(s.without(b), k, f);
    EXPECT_EQ(d.poly(), direct.poly());
    EXPECT_EQ(d.row_info(), direct.row_info());
    const Vec pts = f->sample_distinct_raw(n, rng);
    EXPECT_EQ(r.evaluate(pts).matrix(), ReducedIntersectionMatrix::evaluated(s, k, f, pts).matrix());
  }
}

TEST(Rim, DeleteExamples) {
  auto f = make_field(7);
  const auto r = ReducedIntersectionMatrix::symbolic(example(), 3, f);
  EXPECT_EQ(r.delete_rows(0).poly(), r.poly());
  EXPECT_EQ(r.delete_rows(Mask{1} << 3).rows(), 5u);
  const auto empty = ReducedIntersectionMatrix::symbolic(SetSystem::from_lists(3, {{1}, {2}, {3}}), 2, f);
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 4u);
}

TEST(Rim, PsiEmbedding) {
  auto f = make_field(5);
  Rng rng(21);
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + rng.uniform(3), t = 2 + rng.uniform(2), k = 1 + rng.uniform(n - 1);
    const SetSystem s = random_system(n, t, rng, true);
    const Vec pts = f->sample_distinct_raw(n, rng);
    const FieldMatrix g = vandermonde(f, pts, k);
    FieldMatrix dmat(f, n, n);
    const Vec d = dual_diag(*f, pts);
    for (std::size_t i = 0; i < n; ++i) dmat(i, i) = d[i];
    const FieldMatrix h = vandermonde(f, pts, n - k).transpose() * dmat;
    ASSERT_TRUE((h * g).is_zero());
    const Vec zero((t - 1) * k, 0);
    EXPECT_TRUE(verify_psi(g, h, s, zero));
    const auto r = ReducedIntersectionMatrix::from_generator(s, g);
    const auto ker = kernel(r.matrix());
    std::vector<Vec> images;
    for (const Vec& x : ker) {
      EXPECT_TRUE(verify_psi(g, h, s, x));
      images.push_back(psi_embed(g, s, x));
    }
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = a + 1; b < images.size(); ++b) EXPECT_NE(images[a], images[b]);
    nontrivial += !ker.empty();
    if (!ker.empty() && r.rows() > 0) {
      Vec bad = ker[0];
      // Perturb until outside the kernel.
      for (std::size_t c = 0; c < bad.size(); ++c) {
        Vec v = bad;
        v[c] = f->add(v[c], 1);
        const Vec rv = r.matrix().apply(v);
        if (std::any_of(rv.begin(), rv.end(), [](std::uint64_t e) { return e != 0; })) {
          EXPECT_ERRC(psi_embed(g, s, v), Errc::NotInKernel);
          break;
        }
      }
    }
  }
  EXPECT_GT(nontrivial, 20u);
  auto g = vandermonde(f, Vec{1, 2, 3}, 1);
  EXPECT_ERRC(psi_embed(g, SetSystem::from_lists(3, {{1}, {2}}), Vec{0}), Errc::CoverageViolated);
}

TEST(Rim, WitnessFromOracleViolations) {
  auto f = make_field(7);
  Rng rng(3);
  std::size_t checked = 0;
  for (int c = 0; c < 3; ++c) {
    const auto code = random_puncture(f, 6, 3, rng);
    for_each_violation(code, Rational(1, 3), 2, [&](const Violation& v) {
      const Witness w = witness_from_violation(code, v.center, v.words, Rational(0));
      EXPECT_GE(w.t, 2u);
      EXPECT_TRUE(check_admissible(w.system, 3, Rational(0)).admissible());
      EXPECT_TRUE(std::any_of(w.kernel_vector.begin(), w.kernel_vector.end(), [](auto e) { return e != 0; }));
      const auto r = ReducedIntersectionMatrix::from_generator(w.system, code.generator());
      for (std::uint64_t e : r.matrix().apply(w.kernel_vector)) EXPECT_EQ(e, 0u);
      return ++checked < 200;
    });
  }
  EXPECT_GT(checked, 0u);
  const auto code = random_puncture(f, 6, 3, rng);
  const Vec w0 = code.encode(Vec{1, 2, 3});
  EXPECT_ERRC(witness_from_violation(code, w0, {w0, w0}, Rational(0)), Errc::NotAViolation);
  // Two codewords far from the center admit no S.
  const Vec far = code.encode(Vec{4, 0, 0});
  EXPECT_ERRC(witness_from_violation(code, code.encode(Vec{0, 0, 0}), {w0, far}, Rational(0)), Errc::NoAdmissibleS);
}

}  // namespace
}  // namespace rslab
