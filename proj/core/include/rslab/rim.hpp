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

// Reduced intersection matrices of a set system with respect to a generator.
//
// For each ground element i with J_i = {j_1 < ... < j_s}, s >= 2, and each
// u = 2..s there is one row: +G_i in block j_1, -G_i in block j_u unless j_u
// is the last block, zeros elsewhere. There are t-1 blocks of k columns.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rslab/linalg.hpp"
#include "rslab/rational.hpp"
#include "rslab/rscode.hpp"
#include "rslab/setsys.hpp"

namespace rslab {

/// Provenance of one row. All indices 0-based; u is the position in J_i
/// counted from 1, so 2 <= u <= |J_i|.
struct RimRow {
  std::size_t element = 0;
  std::size_t u = 0;
  std::size_t plus_block = 0;
  std::optional<std::size_t> minus_block;
  friend bool operator==(const RimRow&, const RimRow&) = default;
};

/// Row structure only; shared by the symbolic and the evaluated builders.
std::vector<RimRow> rim_rows(const SetSystem& sys);

class ReducedIntersectionMatrix {
 public:
  /// G = V_{n,k} over variables X_1..X_n with coefficients in `field`.
  static ReducedIntersectionMatrix symbolic(const SetSystem& sys, std::size_t k, const FieldPtr& field);
  /// G = V_{n,k}(points).
  static ReducedIntersectionMatrix evaluated(const SetSystem& sys, std::size_t k, const FieldPtr& field,
                                             std::span<const std::uint64_t> points);
  /// Arbitrary concrete n x k generator.
  static ReducedIntersectionMatrix from_generator(const SetSystem& sys, const FieldMatrix& g);

  const SetSystem& system() const noexcept { return sys_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t t() const noexcept { return sys_.t(); }
  std::size_t rows() const noexcept { return meta_.size(); }
  std::size_t cols() const noexcept { return (sys_.t() - 1) * k_; }
  const std::vector<RimRow>& row_info() const noexcept { return meta_; }
  bool is_symbolic() const noexcept { return symbolic_; }
  const PolyMatrix& poly() const;
  const FieldMatrix& matrix() const;

  /// Drops every row whose element lies in B.
  ReducedIntersectionMatrix delete_rows(Mask b) const;
  /// Symbolic form evaluated at a full point.
  ReducedIntersectionMatrix evaluate(std::span<const std::uint64_t> points) const;

  std::string to_string() const;

 private:
  SetSystem sys_;
  std::size_t k_ = 0;
  bool symbolic_ = false;
  std::vector<RimRow> meta_;
  PolyMatrix poly_;
  FieldMatrix matrix_;
};

/// The staircase matrix with block rows [H_{A_1} 0 .. H_{A_j} .. 0], j = 2..t.
FieldMatrix staircase(const FieldMatrix& h, const std::vector<std::vector<std::size_t>>& sets);

/// psi(x) = (-y_1, y_2, .., y_t), y_j = (phi(x) - G x_j) restricted to
/// A_j = [n] \ I_j, with phi_i(x) = G_i x_{j_i} for j_i the first block
/// containing i and x_t = 0. Requires the union of the I_j to be [n] and x in
/// the kernel of R_{G, I}.
Vec psi_embed(const FieldMatrix& g, const SetSystem& sys, std::span<const std::uint64_t> x);
/// M psi(x) = 0 for the staircase M built from H, and psi(x) = 0 only for x = 0.
bool verify_psi(const FieldMatrix& g, const FieldMatrix& h, const SetSystem& sys, std::span<const std::uint64_t> x);

struct Witness {
  std::size_t t = 0;
  std::vector<std::size_t> chosen;  // 0-based indices into the codeword list, increasing
  SetSystem system;                 // agreement sets of the chosen codewords, reindexed
  Vec kernel_vector;                // (x_1 - x_t, .., x_{t-1} - x_t)
};

/// Turns L+1 distinct codewords near y into a kernel vector of a reduced
/// intersection matrix whose set system meets both admissibility conditions.
Witness witness_from_violation(const PuncturedRSCode& code, std::span<const std::uint64_t> y,
                               const std::vector<Vec>& codewords, const Rational& lambda);

}  // namespace rslab
