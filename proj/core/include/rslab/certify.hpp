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

// Full-column-rank certification of reduced intersection matrices under an
// assignment of the evaluation points, and the accompanying bounds.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "rslab/linalg.hpp"
#include "rslab/rational.hpp"
#include "rslab/rim.hpp"

namespace rslab {

enum class Outcome { Success, Fail, FaultyTuple };
std::string outcome_name(Outcome o);

struct RoundEvidence {
  Mask deleted = 0;          // B at the start of the round
  bool full_rank = false;
  RowSelection selection;    // rows of the undeleted matrix, 0-based
  std::string det_fingerprint;
  std::optional<std::size_t> faulty;  // 0-based ground element
};

struct CertificationOutcome {
  Outcome tag = Outcome::Fail;
  std::vector<std::size_t> faulty;  // 0-based, one per round when FaultyTuple
  std::vector<RoundEvidence> rounds;
  /// SUCCESS: rows whose evaluated submatrix is nonsingular.
  RowSelection certificate;

  /// Indices and row selections are written 1-based.
  nlohmann::json to_json() const;
};

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string fingerprint(const MultiPoly& p);

/// Faulty index of the prefix assignment X_1 = a_1, X_2 = a_2, ... for the
/// polynomial det, which must be nonzero. None iff det(a) != 0. Zeroness is
/// monotone along the prefixes, so the first zero prefix is the answer.
std::optional<std::size_t> faulty_index_of(const MultiPoly& det, std::span<const std::uint64_t> point,
                                           const ZeroTestOptions& zero_test);
/// Same, for the square submatrix of `a` on rows `m`.
std::optional<std::size_t> faulty_index(const PolyMatrix& a, std::span<const std::uint64_t> point,
                                        const RowSelection& m, const ZeroTestOptions& zero_test);

struct CertifyOptions {
  /// Zero test for partially assigned determinants. Grid uses the per-variable
  /// bound (t-1)(k-1); Symbolic reads the term map; both are exact.
  ZeroTest zero_test = ZeroTest::Grid;
  unsigned randomized_trials = 3;
  std::uint64_t seed = 0xce47;
  bool record_evidence = true;
};

/// Runs the certification loop for one set system over many assignments.
/// Rank, lexicographically minimal row selection and determinant of every
/// visited R^B depend only on (I, k, B) and are cached across runs.
class Certifier {
 public:
  Certifier(SetSystem sys, std::size_t k, FieldPtr field, CertifyOptions options = {});

  CertificationOutcome run(std::span<const std::uint64_t> points, std::size_t r);

  struct RoundData {
    bool full_rank = false;
    RowSelection selection;  // indices into the undeleted matrix
    MultiPoly det;
    std::string det_fingerprint;
  };
  const RoundData& round_data(Mask b);

  const ReducedIntersectionMatrix& matrix() const noexcept { return rim_; }
  std::size_t degree_bound() const noexcept { return (sys_.t() - 1) * (k_ - 1); }
  /// Determinants built so far, and those whose degree in some variable
  /// exceeded degree_bound().
  std::size_t determinants_built() const noexcept { return dets_built_; }
  std::size_t degree_violations() const noexcept { return degree_violations_; }

 private:
  std::uint64_t evaluated_det(const RowSelection& rows, std::span<const std::uint64_t> points);

  SetSystem sys_;
  std::size_t k_;
  FieldPtr field_;
  CertifyOptions options_;
  ReducedIntersectionMatrix rim_;
  std::unordered_map<Mask, RoundData> cache_;
  std::vector<std::uint64_t> powers_, scratch_;
  std::size_t dets_built_ = 0, degree_violations_ = 0;
};

CertificationOutcome certify_full_column_rank(const SetSystem& sys, std::size_t k, const FieldPtr& field,
                                              std::span<const std::uint64_t> points, std::size_t r,
                                              const CertifyOptions& options = {});

struct GlobalBoundInput {
  std::size_t L = 1;
  Rational eps;
};

struct BoundReport {
  std::size_t t = 0, n = 0, k = 0, r = 0;
  std::uint64_t q = 0;
  BigRational per_tuple;    // ((t-1)(k-1)/(q-n+1))^r
  BigRational union_bound;  // ((t-1)n(k-1)/(q-n+1))^r
  /// 2^{(L+2)n} (Ln(k-1)/(q-n+1))^{eps n / L}: exact when the exponent is an
  /// integer, and always as log2 for scale.
  std::optional<BigRational> global_exact;
  std::optional<double> global_log2;
  std::optional<std::size_t> L;
  std::optional<Rational> eps;

  nlohmann::json to_json() const;
};

BoundReport failure_bound(std::size_t t, std::size_t n, std::size_t k, std::uint64_t q, std::size_t r,
                          std::optional<GlobalBoundInput> global = std::nullopt);

double to_double(const BigRational& r);

enum class ParamMode { Main, Capacity };

struct ParamInput {
  ParamMode mode = ParamMode::Main;
  Rational eps;
  Rational c = Rational(3);
  Rational delta = Rational(1, 2);  // capacity mode only
  std::size_t n = 1, k = 1;
  std::size_t L = 1;                // main mode only
};

struct TheoremParams {
  ParamMode mode = ParamMode::Main;
  std::size_t L = 1;
  Rational eps_effective;  // eps in main mode, delta*eps in capacity mode
  Rational lambda;
  std::vector<std::pair<std::size_t, std::size_t>> r_by_t;  // (t, r) for t = 2..L+1
  std::optional<BigInt> required_q;                         // none when eps = 0
  Rational radius;

  nlohmann::json to_json() const;
};

TheoremParams theorem_params(const ParamInput& in);

/// Smallest integer N >= 2^{num/den} * x, for den >= 1 and x >= 0.
BigInt ceil_pow2_times(const BigInt& num, const BigInt& den, const BigInt& x);

}  // namespace rslab
