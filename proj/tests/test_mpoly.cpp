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

#include <gtest/gtest.h>

#include "rslab/mpoly.hpp"
#include "rslab/rng.hpp"
#include "test_util.hpp"

namespace rslab {
namespace {

class MPoly : public ::testing::Test {
 protected:
  FieldPtr f = make_field(7);
  MultiPoly x(unsigned v, unsigned nv = 3) const { return MultiPoly::variable(f, nv, v); }
  MultiPoly c(std::uint64_t v, unsigned nv = 3) const { return MultiPoly::constant(f, nv, v); }
};

TEST_F(MPoly, RingExamples) {
  EXPECT_EQ((x(0) + x(1)) + (x(0) - x(1)), x(0).scale(2));
  EXPECT_EQ((x(0) + c(1)) * (x(0) - c(1)), x(0) * x(0) - c(1));
  EXPECT_TRUE((x(0) * c(0)).is_zero());
  EXPECT_TRUE((x(0) - x(0)).is_zero());
}

TEST_F(MPoly, TextForm) {
  const MultiPoly p = MultiPoly::variable(f, 3, 0, 2) * x(2).scale(2) + c(5);
  EXPECT_EQ(p.to_string(), "2*X1^2*X3 + 5");
  EXPECT_EQ(c(0).to_string(), "0");
}

TEST_F(MPoly, PartialAssign) {
  EXPECT_EQ((x(0) + x(1)).partial_assign(Assignment{{0, 1}}), c(1) + x(1));
  EXPECT_TRUE((x(0) * x(1) * x(1)).partial_assign(Assignment{{0, 0}}).is_zero());
  EXPECT_ERRC(x(0).partial_assign(Assignment{{5, 1}}), Errc::IndexOutOfRange);
}

TEST_F(MPoly, Degrees) {
  const MultiPoly p = x(0) * x(0) * x(1);
  EXPECT_EQ(p.degree_in(0), 2);
  EXPECT_EQ(p.degree_in(2), 0);
  EXPECT_EQ(c(0).degree_in(0), -1);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_ERRC(p.degree_in(3), Errc::IndexOutOfRange);
}

TEST_F(MPoly, MixedContexts) {
  auto g = make_field(11);
  EXPECT_ERRC(x(0) + MultiPoly::variable(g, 3, 0), Errc::MixedContexts);
  EXPECT_ERRC(x(0) + x(0, 4), Errc::MixedContexts);
}

TEST_F(MPoly, ZeroTests) {
  const MultiPoly sq = (x(0) + x(1)) * (x(0) + x(1));
  ZeroTestOptions grid{ZeroTest::Grid, 2};
  EXPECT_FALSE(is_zero_poly(sq, grid).is_zero);
  EXPECT_TRUE(is_zero_poly(x(0) - x(0), {ZeroTest::Symbolic}).is_zero);
  // x^7 - x vanishes on all of GF(7) but is not the zero polynomial.
  const MultiPoly frob = MultiPoly::variable(f, 3, 0, 7) - x(0);
  EXPECT_FALSE(is_zero_poly(frob, {ZeroTest::Symbolic}).is_zero);
  EXPECT_ERRC(is_zero_poly(frob, {ZeroTest::Grid, 7}), Errc::GridTooLargeForField);
  const auto rnd = is_zero_poly(frob, {ZeroTest::Randomized, -1, 4, 3});
  EXPECT_FALSE(rnd.is_zero);
  EXPECT_TRUE(rnd.exact);  // a nonzero evaluation is a proof
}

TEST_F(MPoly, EvaluateMatchesHorner) {
  Rng rng(3);
  const MultiPoly p = (x(0) + c(2)) * (x(1) - x(2)) + x(2) * x(2) * x(2);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::uint64_t> pt{rng.uniform(7), rng.uniform(7), rng.uniform(7)};
    const std::uint64_t want = (((pt[0] + 2) * (pt[1] + 7 - pt[2])) + pt[2] * pt[2] * pt[2]) % 7;
    EXPECT_EQ(p.evaluate(pt), want);
  }
}

TEST_F(MPoly, DivideExact) {
  const MultiPoly a = x(0) - x(1), b = x(0) + x(2);
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_ERRC(divide_exact(a * b + c(1), b), Errc::NotDivisible);
}

}  // namespace
}  // namespace rslab
