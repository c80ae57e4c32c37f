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

#include <cstdint>
#include <random>

namespace rslab {

/// Seeded generator with a platform-independent output stream.
///
/// std::mt19937_64 is bit-exact across standard libraries, but the standard
/// distributions are not, so bounded draws are done here by rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
    return uniform(denominator) < numerator;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Counter-based seed split: the seed for trial `index` of stream `stream`
/// is splitmix64 applied to master + golden * (stream * 2^32 + index + 1).
/// It depends only on (master, stream, index), never on execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept;

}  // namespace rslab
