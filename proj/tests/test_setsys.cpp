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

#include "rslab/rng.hpp"
#include "rslab/setsys.hpp"
#include "test_util.hpp"

namespace rslab {
namespace {

SetSystem example() { return SetSystem::from_lists(6, {{1, 3, 4}, {1, 4, 5}, {2, 3, 4, 5}, {1, 2, 4, 6}}); }

SetSystem random_system(std::size_t n, std::size_t t, Rng& rng) {
  std::vector<Mask> sets(t);
  for (auto& s : sets) s = rng.uniform(Mask{1} << n);
  return SetSystem(n, sets);
}

TEST(SetSys, Weight) {
  const SetSystem s = example();
  EXPECT_EQ(s.weight(), 8u);
  for (std::uint32_t j = 0; j < 4; ++j) EXPECT_EQ(s.weight(1u << j), 0u);
  EXPECT_EQ(SetSystem::from_lists(4, {{1}, {2}, {3, 4}}).weight(), 0u);
  EXPECT_ERRC(s.weight(0), Errc::EmptyJ);
  EXPECT_ERRC(SetSystem::from_lists(3, {{1}}), Errc::TDegenerate);
}

TEST(SetSys, DeriveJ) {
  const auto js = example().derive_J();
  EXPECT_EQ(js[0], 0b1011u);  // J_1 = {1, 2, 4}
  EXPECT_EQ(js[1], 0b1100u);  // J_2 = {3, 4}
  EXPECT_EQ(js[3], 0b1111u);
  EXPECT_EQ(js[5], 0b1000u);
  for (std::uint32_t j : SetSystem(3, {0, 0}).derive_J()) EXPECT_EQ(j, 0u);
}

TEST(SetSys, RowCountEqualsWeightAndRoundTrip) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem s = random_system(1 + rng.uniform(8), 2 + rng.uniform(4), rng);
    std::uint64_t rows = 0;
    const auto js = s.derive_J();
    for (std::uint32_t j : js) rows += std::popcount(j) >= 2 ? std::popcount(j) - 1 : 0;
    EXPECT_EQ(rows, s.weight());
    EXPECT_EQ(SetSystem::from_J(s.n(), s.t(), js), s);
    for (std::size_t i = 0; i < s.n(); ++i)
      for (std::size_t j = 0; j < s.t(); ++j) EXPECT_EQ(s.contains(j, i), ((js[i] >> j) & 1) != 0);
  }
}

TEST(SetSys, WeightUnderDeletion) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem s = random_system(2 + rng.uniform(7), 2 + rng.uniform(4), rng);
    const Mask b = rng.uniform(s.ground() + 1);
    const SetSystem d = s.without(b);
    const std::uint64_t bsize = static_cast<std::uint64_t>(std::popcount(b));
    EXPECT_GE(d.weight() + bsize * (s.t() - 1), s.weight());
    for (std::uint32_t j = 1; j <= s.all_blocks(); ++j) EXPECT_LE(d.weight(j), s.weight(j));
  }
}

TEST(SetSys, Admissibility) {
  const auto full = SetSystem::from_lists(4, {{1, 2, 3, 4}, {1, 2, 3, 4}});
  EXPECT_TRUE(check_admissible(full, 2, Rational(1)).admissible());   // 4 >= 2*2
  EXPECT_FALSE(check_admissible(full, 3, Rational(1)).admissible());  // 4 < 6
  const auto rep = check_admissible(example(), 3, Rational(0));
  EXPECT_EQ(rep.weight, 8u);
  EXPECT_FALSE(rep.weight_condition);
  // Blocks 1 and 2 share {1, 4}: weight 2 > (1+0)(2-1)*1.
  const auto bad = check_admissible(SetSystem::from_lists(4, {{1, 4}, {1, 4}, {2, 3}}), 1, Rational(0));
  EXPECT_FALSE(bad.subset_condition);
  ASSERT_TRUE(bad.violating_J);
  EXPECT_GT(SetSystem::from_lists(4, {{1, 4}, {1, 4}, {2, 3}}).weight(*bad.violating_J),
            static_cast<std::uint64_t>(std::popcount(*bad.violating_J) - 1));
  EXPECT_TRUE(weight_at_least(3, Rational(1, 2), 1, 2));
  EXPECT_FALSE(weight_at_least(2, Rational(1, 2), 1, 2));
}

// Independent brute force over all 16 pairs at n=2.
TEST(SetSys, EnumerateTinyAgainstBruteForce) {
  std::size_t want = 0;
  for (Mask a = 0; a < 4; ++a)
    for (Mask b = 0; b < 4; ++b) want += std::popcount(a & b) >= 1;
  EXPECT_EQ(enumerate_admissible(2, 1, 2, Rational(0)).size(), want);
  EXPECT_TRUE(enumerate_admissible(3, 2, 2, Rational(100)).empty());
  EXPECT_ERRC(enumerate_admissible(5, 1, 5, Rational(0)), Errc::SearchSpaceTooLarge);
}

TEST(SetSys, EnumerationIsCompleteAndSound) {
  for (std::size_t t = 2; t <= 3; ++t) {
    const std::size_t n = t == 2 ? 5 : 4;
    const Rational lambda(1, 2);
    const auto got = enumerate_admissible(n, 2, t, lambda);
    std::size_t expected = 0;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (n * t)); ++idx) {
      expected += check_admissible(system_from_index(n, t, idx), 2, lambda).admissible();
    }
    EXPECT_EQ(got.size(), expected);
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_TRUE(check_admissible(got[i], 2, lambda).admissible());
      const std::uint64_t idx = canonical_index(got[i]);
      if (i) EXPECT_GT(idx, prev);
      prev = idx;
      EXPECT_EQ(system_from_index(n, t, idx), got[i]);
    }
  }
}

TEST(SetSys, JsonRoundTrip) {
  const SetSystem s = example();
  EXPECT_EQ(s.to_json()["sets"][0], nlohmann::json({1, 3, 4}));
  EXPECT_EQ(SetSystem::from_json(s.to_json()), s);
}

}  // namespace
}  // namespace rslab
