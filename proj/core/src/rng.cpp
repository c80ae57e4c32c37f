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

#include "rslab/rng.hpp"

#include "rslab/error.hpp"

namespace rslab {

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) raise(Errc::InvalidArgument, "uniform bound must be positive");
  if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) raise(Errc::InvalidArgument, "uniform_int with empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return lo + static_cast<std::int64_t>(uniform(span));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept {
  const std::uint64_t counter = (stream << 32) + index + 1;
  return splitmix64(master + 0x9E3779B97F4A7C15ULL * counter);
}

}  // namespace rslab
