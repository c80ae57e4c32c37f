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

// Indexed families I_1..I_t of subsets of a ground set of size n <= 64.
// Internally elements and block indices are 0-based bit positions; the JSON
// form and user-facing text are 1-based.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rslab/rational.hpp"

namespace rslab {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;
inline constexpr std::size_t kMaxBlocks = 16;

class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(std::size_t n, std::vector<Mask> sets);
  /// Sets given as lists of 1-based elements.
  static SetSystem from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& sets);

  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return sets_.size(); }
  Mask set(std::size_t j) const { return sets_.at(j); }
  const std::vector<Mask>& sets() const noexcept { return sets_; }
  bool contains(std::size_t j, std::size_t i) const { return (sets_.at(j) >> i) & 1; }
  Mask ground() const noexcept { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  Mask union_mask() const noexcept;

  /// wt(I_J) for J a nonempty bit mask over blocks.
  std::uint64_t weight(std::uint32_t blocks) const;
  std::uint64_t weight() const { return weight(all_blocks()); }
  std::uint32_t all_blocks() const noexcept { return (std::uint32_t{1} << t()) - 1; }

  /// J_i = {j : i in I_j} as block masks, one per ground element.
  std::vector<std::uint32_t> derive_J() const;
  static SetSystem from_J(std::size_t n, std::size_t t, const std::vector<std::uint32_t>& js);

  /// The system I_j \ B.
  SetSystem without(Mask b) const;
  /// Subsystem of the blocks in `blocks`, keeping their relative order.
  SetSystem restrict_blocks(std::uint32_t blocks) const;

  nlohmann::json to_json() const;
  static SetSystem from_json(const nlohmann::json& j);
  std::string to_string() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Mask> sets_;
};

struct AdmissibilityReport {
  std::uint64_t weight = 0;
  bool weight_condition = false;    // wt(I_[t]) >= (1+lambda)(t-1)k
  bool subset_condition = false;    // wt(I_J) <= (1+lambda)(|J|-1)k for nonempty proper J
  std::optional<std::uint32_t> violating_J;
  bool admissible() const noexcept { return weight_condition && subset_condition; }
};

/// Exact check with cross-multiplied integers.
AdmissibilityReport check_admissible(const SetSystem& sys, std::size_t k, const Rational& lambda);

/// (1+lambda) * m * k <= w, exactly.
bool weight_at_least(std::uint64_t w, const Rational& lambda, std::uint64_t m, std::size_t k);

inline constexpr std::size_t kMaxEnumerationBits = 24;

/// Visits every admissible system in lexicographic order of the concatenated
/// characteristic bit strings (I_1 first, element 1 most significant). The
/// optional [begin, end) restricts the raw index range so a sweep can be
/// split by prefix. Return false from visit to stop early.
void for_each_admissible(std::size_t n, std::size_t k, std::size_t t, const Rational& lambda,
                         const std::function<bool(const SetSystem&)>& visit,
                         std::optional<std::pair<std::uint64_t, std::uint64_t>> range = std::nullopt);
std::vector<SetSystem> enumerate_admissible(std::size_t n, std::size_t k, std::size_t t, const Rational& lambda);

/// Raw index of a system in the canonical enumeration order.
std::uint64_t canonical_index(const SetSystem& sys);
SetSystem system_from_index(std::size_t n, std::size_t t, std::uint64_t index);

}  // namespace rslab
