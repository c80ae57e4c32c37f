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

// Brute-force ground truth for average-radius list decodability of tiny
// punctured Reed-Solomon codes.
//
// Messages are numbered canonically: message m has coefficient c equal to
// digit c of m in base q (low degree first). Subsets of codewords are visited
// in lexicographic order of their message numbers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "rslab/rational.hpp"
#include "rslab/rscode.hpp"

namespace rslab {

class Rng;

struct OracleCaps {
  std::uint64_t max_codewords = 100000;    // q^k
  std::uint64_t max_tuples = 10000000;     // C(q^k, L+1)
};

/// Coordinate-wise most frequent symbol; ties go to the smallest element.
Vec plurality_center(const std::vector<Vec>& words);
/// Sum over the words of the Hamming distance to y.
std::uint64_t total_distance(const std::vector<Vec>& words, std::span<const std::uint64_t> y);
/// (1/|words|) * sum of relative distances, exactly.
Rational average_relative_distance(const std::vector<Vec>& words, std::span<const std::uint64_t> y);

struct Violation {
  Vec center;
  std::vector<std::uint64_t> indices;  // canonical message numbers, increasing
  std::vector<Vec> messages;
  std::vector<Vec> words;
  Rational average;

  nlohmann::json to_json() const;
  static Violation from_json(const nlohmann::json& j);
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  bool decodable = true;
  Rational rho;
  std::size_t L = 0;
  std::uint64_t tuples_checked = 0;
  std::optional<Violation> violation;  // first in canonical order

  nlohmann::json to_json() const;
  static Verdict from_json(const nlohmann::json& j);
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Message with canonical number m.
Vec message_of(const PuncturedRSCode& code, std::uint64_t m);
/// All codewords in canonical order. Raises EnumerationCapExceeded past the cap.
std::vector<Vec> all_codewords(const PuncturedRSCode& code, const OracleCaps& caps = {});

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) noexcept;

Verdict is_avg_list_decodable(const PuncturedRSCode& code, const Rational& rho, std::size_t L,
                              const OracleCaps& caps = {});

/// Visits every violating (L+1)-subset in canonical order at its plurality
/// center until `visit` returns false. Returns the number visited.
std::uint64_t for_each_violation(const PuncturedRSCode& code, const Rational& rho, std::size_t L,
                                 const std::function<bool(const Violation&)>& visit, const OracleCaps& caps = {});

/// Plain max-radius check at sampled centers: some ball of relative radius
/// rho around a sampled y holding L+1 codewords. Centers are every word of
/// F_q^n when q^n <= center_cap, otherwise `samples` uniform draws.
struct MaxRadiusHit {
  Vec center;
  std::vector<std::uint64_t> indices;
};
std::optional<MaxRadiusHit> max_radius_spot_check(const PuncturedRSCode& code, const Rational& rho, std::size_t L,
                                                  Rng& rng, std::uint64_t samples = 2000,
                                                  std::uint64_t center_cap = 10000, const OracleCaps& caps = {});

/// Minimum relative distance over nonzero codewords.
Rational min_distance(const PuncturedRSCode& code, const OracleCaps& caps = {});

/// Violation at the plurality center of the given messages, if any.
std::optional<Violation> check_tuple(const PuncturedRSCode& code, const std::vector<std::uint64_t>& indices,
                                     const Rational& rho);

}  // namespace rslab
