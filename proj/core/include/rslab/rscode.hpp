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

// Reed-Solomon codes evaluated at an ordered tuple of distinct points.

#include <cstddef>
#include <span>

#include <nlohmann/json.hpp>

#include "rslab/linalg.hpp"
#include "rslab/rational.hpp"

namespace rslab {

class Rng;

class PuncturedRSCode {
 public:
  PuncturedRSCode(FieldPtr field, std::size_t k, Vec points);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return points_.size(); }
  std::size_t k() const noexcept { return k_; }
  const Vec& points() const noexcept { return points_; }
  Rational rate() const;
  Rational design_distance() const;

  /// n x k generator V(i, j) = alpha_i^j.
  FieldMatrix generator() const;
  /// Codeword of the polynomial with coefficients `message`, low degree first.
  Vec encode(std::span<const std::uint64_t> message) const;

  nlohmann::json to_json() const;
  static PuncturedRSCode from_json(const nlohmann::json& j);

 private:
  FieldPtr field_;
  std::size_t k_;
  Vec points_;
};

FieldMatrix vandermonde(const FieldPtr& field, std::span<const std::uint64_t> points, std::size_t k);
/// n x k matrix with entry (i, j) = X_{i+1}^j over n variables.
PolyMatrix symbolic_vandermonde(std::size_t n, std::size_t k, const FieldPtr& field);

PuncturedRSCode random_puncture(const FieldPtr& field, std::size_t n, std::size_t k, Rng& rng);

/// v_i = prod_{j != i} 1 / (alpha_i - alpha_j).
Vec dual_diag(const Field& field, std::span<const std::uint64_t> points);
/// V_{n,n-k}^T D V_{n,k}, which is zero for distinct points.
FieldMatrix duality_product(const FieldPtr& field, std::span<const std::uint64_t> points, std::size_t k);
bool check_duality(const FieldPtr& field, std::span<const std::uint64_t> points, std::size_t k);

nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

}  // namespace rslab
