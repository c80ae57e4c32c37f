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

// Experiment orchestration: identity suites, Monte Carlo campaigns, oracle
// roundtrips and their reports. Every report is a function of (config, seed);
// wall-clock time is recorded only when `timing` is set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rslab/certify.hpp"
#include "rslab/oracle.hpp"
#include "rslab/setsys.hpp"

namespace rslab {

struct ExperimentConfig {
  // Field GF(p^m); modulus is low-degree-first and monic, or derived.
  std::uint64_t p = 251;
  unsigned m = 1;
  std::optional<std::vector<std::uint64_t>> modulus;

  std::size_t n = 6, k = 2;
  std::optional<std::size_t> t;  // default 2
  std::size_t L = 1;
  Rational eps = Rational(1, 2);
  Rational c = Rational(3);
  Rational delta = Rational(1, 2);
  std::optional<Rational> lambda;  // default eps * n / k
  std::optional<std::size_t> r;    // default floor(lambda k / (t-1) + 1)

  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  OracleCaps caps;
  ZeroTest zero_test = ZeroTest::Grid;

  // montecarlo
  std::string mc_mode = "kernel";           // "kernel" or "oracle"
  std::vector<std::uint64_t> q_sweep;       // empty: the configured field only
  std::optional<SetSystem> system;          // fixed system instead of the admissible family
  // identities
  std::uint64_t identity_samples = 200;
  std::uint64_t sweep_alphas = 0;           // certification runs per system in the sweep
  // roundtrip
  std::uint64_t min_violations = 0;         // harvest target; 0 disables the check
  std::uint64_t max_violations_per_code = 0;  // 0: unlimited

  std::string json_out, csv_out;
  bool timing = false;

  std::size_t t_or_default() const noexcept { return t.value_or(2); }
  Rational lambda_or_default() const;
  std::size_t r_or_default() const;
  FieldPtr field() const;

  /// Raises ConfigInvalid on inconsistent settings.
  void validate() const;
  nlohmann::json to_json() const;
  /// Unknown keys are rejected. Keys absent from j keep the values of `base`.
  static ExperimentConfig from_json(const nlohmann::json& j, const ExperimentConfig& base);
  static ExperimentConfig from_json(const nlohmann::json& j);
};

ZeroTest zero_test_from_string(const std::string& s);
std::string zero_test_name(ZeroTest z);

/// GF(q) for a prime power q.
FieldPtr field_of_order(std::uint64_t q);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json data;
  friend bool operator==(const Check&, const Check&) = default;
};

/// One CSV row. `bound` and `empirical` depend on the campaign kind; see the
/// README for their meaning.
struct TrialRow {
  std::uint64_t trial = 0, seed = 0, q = 0;
  std::size_t n = 0, k = 0, t = 0, r = 0;
  std::string outcome;
  double bound = 0.0, empirical = 0.0;
  friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

struct CampaignReport {
  std::string kind;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::vector<TrialRow> trials;
  std::vector<Check> checks;
  nlohmann::json bounds = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();
  std::optional<double> wall_clock_s;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
  nlohmann::json to_json() const;
  static CampaignReport from_json(const nlohmann::json& j);
  friend bool operator==(const CampaignReport& a, const CampaignReport& b) { return a.to_json() == b.to_json(); }
};

// ---- exhaustive sweeps -----------------------------------------------------------

struct SweepOptions {
  FieldPtr field;
  std::uint64_t alphas = 0;            // shared random point tuples per system
  std::uint64_t seed = 1;
  std::optional<std::size_t> r;
  ZeroTest zero_test = ZeroTest::Grid;
  /// Every n-th system is re-certified with the grid zero test over the first
  /// `crosscheck_alphas` tuples and compared outcome for outcome; 0 disables.
  std::uint64_t crosscheck_every = 0;
  std::uint64_t crosscheck_alphas = 16;
  bool verify_success = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
};

struct SweepStats {
  std::size_t n = 0, t = 0, k = 0, r = 0;
  Rational lambda;
  std::uint64_t q = 0;
  std::uint64_t systems = 0, b_sets = 0, rank_failures = 0;
  std::uint64_t runs = 0, fails = 0, successes = 0, faulty_tuples = 0;
  std::uint64_t success_unsound = 0, nondistinct = 0;
  std::uint64_t kernel_nonzero = 0;  // among non-SUCCESS runs
  std::uint64_t dets = 0, degree_violations = 0;
  std::uint64_t crosschecked = 0, crosscheck_mismatches = 0;
  std::vector<nlohmann::json> examples;  // first few failures of any kind

  nlohmann::json to_json() const;
};

/// All B with |B|(t-1) <= lambda k.
std::vector<Mask> valid_deletions(std::size_t n, std::size_t t, std::size_t k, const Rational& lambda);

/// Zero-kernel law and certification behaviour over every admissible system.
SweepStats sweep_family(std::size_t n, std::size_t t, std::size_t k, const Rational& lambda,
                        const SweepOptions& options);

/// Rank of the reduced intersection matrix of `sys` under V_{n,k}(points), by
/// plain elimination.
std::size_t evaluated_rank(const SetSystem& sys, std::size_t k, const Field& field,
                           std::span<const std::uint64_t> points);

// ---- campaigns -----------------------------------------------------------------

CampaignReport run_identity_suite(const ExperimentConfig& config);
CampaignReport run_monte_carlo(const ExperimentConfig& config);
CampaignReport run_roundtrip(const ExperimentConfig& config);

enum class ReportFormat { Json, Csv };
std::string report_csv(const CampaignReport& report);
std::string report_json(const CampaignReport& report);
/// Raises IoFailure when the file cannot be written.
void emit_report(const CampaignReport& report, ReportFormat format, const std::string& path);

}  // namespace rslab
