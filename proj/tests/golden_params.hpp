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

// Hand-substituted parameter tuples for the capacity-theorem formulas, shared
// by the unit tests and the acceptance run.

#include <optional>
#include <utility>
#include <vector>

#include "rslab/certify.hpp"

namespace rslab {

struct GoldenParams {
  ParamMode mode;
  Rational eps, c, delta;
  std::size_t n, k, L;
  std::size_t want_L;
  Rational want_lambda, want_radius;
  std::vector<std::pair<std::size_t, std::size_t>> want_r;
  std::optional<BigInt> want_q;
};

inline std::vector<GoldenParams> golden_params() {
  const BigInt two = 2;
  return {
      {ParamMode::Main, {1, 2}, 3, {1, 2}, 4, 2, 1, 1, 1, 0, {{2, 3}}, BigInt(1028)},
      {ParamMode::Main, {1, 4}, 3, {1, 2}, 8, 2, 1, 1, 1, {1, 4}, {{2, 3}}, BigInt(524296)},
      {ParamMode::Main, {1, 2}, 3, {1, 2}, 6, 2, 2, 2, {3, 2}, {1, 9}, {{2, 4}, {3, 2}}, BigInt(12582918)},
      {ParamMode::Main, {1, 2}, 3, {1, 2}, 4, 1, 1, 1, 2, {1, 8}, {{2, 3}}, BigInt(4)},
      {ParamMode::Main, 0, 3, {1, 2}, 5, 2, 1, 1, 0, {3, 10}, {{2, 1}}, std::nullopt},
      {ParamMode::Main, 0, 3, {1, 2}, 8, 4, 3, 3, 0, {3, 8}, {{2, 1}, {3, 1}, {4, 1}}, std::nullopt},
      {ParamMode::Main, {3, 5}, 3, {1, 2}, 5, 2, 1, 1, {3, 2}, 0, {{2, 4}}, BigInt(513)},
      {ParamMode::Main, {1, 2}, {5, 2}, {1, 2}, 4, 2, 1, 1, 1, 0, {{2, 3}}, BigInt(516)},
      {ParamMode::Capacity, {1, 4}, 3, {1, 2}, 8, 2, 0, 5, {1, 2}, {1, 2},
       {{2, 2}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}, BigInt(pow(two, 320) * 40 + 8)},
      {ParamMode::Capacity, {1, 2}, 3, {1, 2}, 4, 2, 0, 1, {1, 2}, 0, {{2, 2}}, BigInt(262148)},
      {ParamMode::Capacity, {1, 10}, 3, {1, 2}, 10, 5, 0, 9, {1, 10}, {2, 5},
       {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}, {10, 1}}, BigInt(pow(two, 2160) * 360 + 10)},
  };
}

}  // namespace rslab
