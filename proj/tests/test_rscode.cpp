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

#include <gtest/gtest.h>

#include "rslab/rng.hpp"
#include "rslab/rscode.hpp"
#include "test_util.hpp"

namespace rslab {
namespace {

TEST(RsCode, Vandermonde) {
  auto f = make_field(7);
  EXPECT_EQ(vandermonde(f, Vec{1, 2}, 2), FieldMatrix::from_rows(f, {{1, 1}, {1, 2}}));
  auto s = symbolic_vandermonde(2, 2, f);
  EXPECT_EQ(s.at(0, 1), MultiPoly::variable(f, 2, 0));
  EXPECT_EQ(s.at(1, 1), MultiPoly::variable(f, 2, 1));
  EXPECT_EQ(s.at(1, 0), MultiPoly::constant(f, 2, 1));
  EXPECT_EQ(s.evaluate(Vec{3, 5}), vandermonde(f, Vec{3, 5}, 2));
}

TEST(RsCode, Encode) {
  auto f = make_field(7);
  PuncturedRSCode code(f, 2, {1, 2, 3});
  EXPECT_EQ(code.encode(Vec{1, 1}), (Vec{2, 3, 4}));
  EXPECT_EQ(code.encode(Vec{5, 0}), (Vec{5, 5, 5}));
  EXPECT_EQ(code.encode(Vec{0, 0}), (Vec{0, 0, 0}));
  EXPECT_EQ(code.generator().apply(Vec{1, 1}), (Vec{2, 3, 4}));
  EXPECT_ERRC(code.encode(Vec{1}), Errc::LengthMismatch);
  EXPECT_ERRC(PuncturedRSCode(f, 2, {1, 1, 3}), Errc::RepeatedPoints);
  EXPECT_EQ(code.rate(), Rational(2, 3));
  EXPECT_EQ(code.design_distance(), Rational(2, 3));
}

TEST(RsCode, RandomPuncture) {
  auto f = make_field(7);
  Rng rng(3);
  auto code = random_puncture(f, 7, 3, rng);
  Vec pts = code.points();
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(pts, (Vec{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_ERRC(random_puncture(f, 8, 3, rng), Errc::NTooLarge);
  Rng a(10), b(10);
  EXPECT_EQ(random_puncture(f, 4, 2, a).points(), random_puncture(f, 4, 2, b).points());
}

TEST(RsCode, DualDiag) {
  auto f = make_field(7);
  EXPECT_EQ(dual_diag(*f, Vec{1, 2, 3}), (Vec{4, 6, 4}));
  EXPECT_TRUE(check_duality(f, Vec{1, 2, 3}, 2));
  EXPECT_TRUE(duality_product(f, Vec{1, 2, 3}, 2).is_zero());
  EXPECT_EQ(duality_product(f, Vec{1, 2, 3}, 2).rows(), 1u);
  EXPECT_ERRC(dual_diag(*f, Vec{1, 1}), Errc::RepeatedPoints);
}

TEST(RsCode, DualityOverSeveralFields) {
  for (auto f : {make_field(7), make_field(2, 8), make_field(3, 3), make_field(65537)}) {
    Rng rng(f->order());
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + rng.uniform(std::min<std::uint64_t>(7, f->order() - 1));
      const Vec pts = f->sample_distinct_raw(n, rng);
      for (std::size_t k = 1; k < n; ++k) EXPECT_TRUE(check_duality(f, pts, k)) << f->describe();
    }
  }
}

TEST(RsCode, JsonRoundTrip) {
  auto f = make_field(2, 4);
  PuncturedRSCode code(f, 2, {1, 5, 9});
  const auto back = PuncturedRSCode::from_json(code.to_json());
  EXPECT_EQ(back.points(), code.points());
  EXPECT_EQ(back.k(), 2u);
  EXPECT_TRUE(back.field()->same_as(*f));
}

}  // namespace
}  // namespace rslab
