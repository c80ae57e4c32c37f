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

#include "rslab/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <set>

#include "rslab/error.hpp"
#include "rslab/rim.hpp"
#include "rslab/rng.hpp"
#include "rslab/rscode.hpp"
#include "rslab/stats.hpp"

namespace rslab {

// ---- config ---------------------------------------------------------------------

ZeroTest zero_test_from_string(const std::string& s) {
  if (s == "grid") return ZeroTest::Grid;
  if (s == "symbolic") return ZeroTest::Symbolic;
  if (s == "randomized") return ZeroTest::Randomized;
  raise(Errc::ConfigInvalid, "unknown zero test '" + s + "' (grid, symbolic, randomized)");
}

std::string zero_test_name(ZeroTest z) {
  switch (z) {
    case ZeroTest::Grid:
      return "grid";
    case ZeroTest::Symbolic:
      return "symbolic";
    case ZeroTest::Randomized:
      return "randomized";
  }
  return "?";
}

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) raise(Errc::InvalidArgument, "field order must be at least 2");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned m = 0;
  std::uint64_t x = q;
  while (x % p == 0) {
    x /= p;
    ++m;
  }
  if (x != 1) raise(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  return Field::make(p, m);
}

Rational ExperimentConfig::lambda_or_default() const {
  if (lambda) return *lambda;
  return eps * Rational(static_cast<std::int64_t>(n)) / Rational(static_cast<std::int64_t>(k));
}

std::size_t ExperimentConfig::r_or_default() const {
  if (r) return *r;
  const Rational x = lambda_or_default() * Rational(static_cast<std::int64_t>(k)) /
                         Rational(static_cast<std::int64_t>(t_or_default() - 1)) +
                     Rational(1);
  return static_cast<std::size_t>(x.floor());
}

FieldPtr ExperimentConfig::field() const { return Field::make(p, m, modulus); }

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& msg) { raise(Errc::ConfigInvalid, msg); };
  FieldPtr f;
  try {
    f = field();
  } catch (const Error& e) {
    bad(std::string("field: ") + e.what());
  }
  if (k < 1) bad("k must be positive");
  if (k > n) bad("need k <= n");
  if (n > f->order()) bad("need n <= q");
  if (n > kMaxGround) bad("n exceeds 64");
  if (t_or_default() < 2) bad("t must be at least 2");
  if (L < 1) bad("L must be positive");
  if (trials < 1) bad("trials must be at least 1");
  if (caps.max_codewords < 1 || caps.max_tuples < 1) bad("caps must be positive");
  if (eps < Rational(0) || eps >= Rational(1)) bad("eps must lie in [0, 1)");
  if (c <= Rational(2)) bad("c must exceed 2");
  if (delta <= Rational(0) || delta >= Rational(1)) bad("delta must lie in (0, 1)");
  if (lambda && *lambda < Rational(0)) bad("lambda must be nonnegative");
  if (r && *r < 1) bad("r must be at least 1");
  if (mc_mode != "kernel" && mc_mode != "oracle") bad("mc_mode must be kernel or oracle");
  for (std::uint64_t q : q_sweep) {
    try {
      field_of_order(q);
    } catch (const Error&) {
      bad("q_sweep entry " + std::to_string(q) + " is not a prime power");
    }
    if (q < n) bad("q_sweep entry below n");
  }
  if (system && (system->n() != n || system->t() != t_or_default())) bad("system disagrees with n or t");
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["m"] = m;
  j["modulus"] = modulus ? nlohmann::json(*modulus) : nlohmann::json(nullptr);
  j["n"] = n;
  j["k"] = k;
  j["t"] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
  j["L"] = L;
  j["eps"] = eps.to_string();
  j["c"] = c.to_string();
  j["delta"] = delta.to_string();
  j["lambda"] = lambda ? nlohmann::json(lambda->to_string()) : nlohmann::json(nullptr);
  j["r"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
  j["trials"] = trials;
  j["seed"] = seed;
  j["max_codewords"] = caps.max_codewords;
  j["max_tuples"] = caps.max_tuples;
  j["zero_test"] = zero_test_name(zero_test);
  j["mc_mode"] = mc_mode;
  j["q_sweep"] = q_sweep;
  j["system"] = system ? system->to_json() : nlohmann::json(nullptr);
  j["identity_samples"] = identity_samples;
  j["sweep_alphas"] = sweep_alphas;
  j["min_violations"] = min_violations;
  j["max_violations_per_code"] = max_violations_per_code;
  j["json_out"] = json_out;
  j["csv_out"] = csv_out;
  j["timing"] = timing;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j, const ExperimentConfig& base) {
  if (!j.is_object()) raise(Errc::ConfigInvalid, "config must be a JSON object");
  ExperimentConfig c = base;
  auto rat = [](const nlohmann::json& v) {
    return v.is_number_integer() ? Rational(v.get<std::int64_t>()) : Rational::parse(v.get<std::string>());
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "p") c.p = v.get<std::uint64_t>();
      else if (key == "m") c.m = v.get<unsigned>();
      else if (key == "modulus") c.modulus = v.is_null() ? std::nullopt : std::optional(v.get<std::vector<std::uint64_t>>());
      else if (key == "n") c.n = v.get<std::size_t>();
      else if (key == "k") c.k = v.get<std::size_t>();
      else if (key == "t") c.t = v.is_null() ? std::nullopt : std::optional(v.get<std::size_t>());
      else if (key == "L") c.L = v.get<std::size_t>();
      else if (key == "eps") c.eps = rat(v);
      else if (key == "c") c.c = rat(v);
      else if (key == "delta") c.delta = rat(v);
      else if (key == "lambda") c.lambda = v.is_null() ? std::nullopt : std::optional(rat(v));
      else if (key == "r") c.r = v.is_null() ? std::nullopt : std::optional(v.get<std::size_t>());
      else if (key == "trials") c.trials = v.get<std::uint64_t>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "max_codewords") c.caps.max_codewords = v.get<std::uint64_t>();
      else if (key == "max_tuples") c.caps.max_tuples = v.get<std::uint64_t>();
      else if (key == "zero_test") c.zero_test = zero_test_from_string(v.get<std::string>());
      else if (key == "mc_mode") c.mc_mode = v.get<std::string>();
      else if (key == "q_sweep") c.q_sweep = v.get<std::vector<std::uint64_t>>();
      else if (key == "system") c.system = v.is_null() ? std::nullopt : std::optional(SetSystem::from_json(v));
      else if (key == "identity_samples") c.identity_samples = v.get<std::uint64_t>();
      else if (key == "sweep_alphas") c.sweep_alphas = v.get<std::uint64_t>();
      else if (key == "min_violations") c.min_violations = v.get<std::uint64_t>();
      else if (key == "max_violations_per_code") c.max_violations_per_code = v.get<std::uint64_t>();
      else if (key == "json_out") c.json_out = v.get<std::string>();
      else if (key == "csv_out") c.csv_out = v.get<std::string>();
      else if (key == "timing") c.timing = v.get<bool>();
      else raise(Errc::ConfigInvalid, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::ConfigInvalid, std::string("malformed config: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ConfigInvalid) throw;
    raise(Errc::ConfigInvalid, std::string("malformed config: ") + e.what());
  }
  return c;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) { return from_json(j, ExperimentConfig()); }

// ---- report ---------------------------------------------------------------------

bool CampaignReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* CampaignReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json CampaignReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRow& r : trials) {
    rows.push_back({{"trial", r.trial}, {"seed", r.seed}, {"q", r.q}, {"n", r.n}, {"k", r.k}, {"t", r.t},
                    {"r", r.r}, {"outcome", r.outcome}, {"bound", r.bound}, {"empirical", r.empirical}});
  }
  nlohmann::json cs = nlohmann::json::array();
  for (const Check& c : checks) {
    cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"data", c.data}});
  }
  nlohmann::json j = {{"kind", kind},     {"config", config}, {"seed", seed},       {"trials", rows},
                      {"checks", cs},     {"bounds", bounds}, {"summary", summary}, {"all_pass", all_pass()}};
  if (wall_clock_s) j["wall_clock_s"] = *wall_clock_s;
  return j;
}

CampaignReport CampaignReport::from_json(const nlohmann::json& j) {
  CampaignReport r;
  r.kind = j.at("kind").get<std::string>();
  r.config = j.at("config");
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& t : j.at("trials")) {
    TrialRow row;
    row.trial = t.at("trial").get<std::uint64_t>();
    row.seed = t.at("seed").get<std::uint64_t>();
    row.q = t.at("q").get<std::uint64_t>();
    row.n = t.at("n").get<std::size_t>();
    row.k = t.at("k").get<std::size_t>();
    row.t = t.at("t").get<std::size_t>();
    row.r = t.at("r").get<std::size_t>();
    row.outcome = t.at("outcome").get<std::string>();
    row.bound = t.at("bound").get<double>();
    row.empirical = t.at("empirical").get<double>();
    r.trials.push_back(std::move(row));
  }
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>(),
                        c.at("data")});
  }
  r.bounds = j.at("bounds");
  r.summary = j.at("summary");
  if (j.contains("wall_clock_s")) r.wall_clock_s = j.at("wall_clock_s").get<double>();
  return r;
}

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string report_csv(const CampaignReport& report) {
  std::string out = "trial,seed,q,n,k,t,r,outcome,bound,empirical\n";
  for (const TrialRow& r : report.trials) {
    out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + std::to_string(r.q) + "," +
           std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.t) + "," + std::to_string(r.r) +
           "," + r.outcome + "," + fmt_double(r.bound) + "," + fmt_double(r.empirical) + "\n";
  }
  return out;
}

std::string report_json(const CampaignReport& report) { return report.to_json().dump(2) + "\n"; }

void emit_report(const CampaignReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::IoFailure, "cannot open '" + path + "' for writing");
  out << (format == ReportFormat::Json ? report_json(report) : report_csv(report));
  out.flush();
  if (!out) raise(Errc::IoFailure, "write to '" + path + "' failed");
}

// ---- sweeps ---------------------------------------------------------------------

nlohmann::json SweepStats::to_json() const {
  return {{"n", n},
          {"t", t},
          {"k", k},
          {"r", r},
          {"lambda", lambda.to_string()},
          {"q", q},
          {"systems", systems},
          {"b_sets", b_sets},
          {"rank_failures", rank_failures},
          {"runs", runs},
          {"fails", fails},
          {"successes", successes},
          {"faulty_tuples", faulty_tuples},
          {"success_unsound", success_unsound},
          {"nondistinct", nondistinct},
          {"kernel_nonzero", kernel_nonzero},
          {"determinants", dets},
          {"degree_violations", degree_violations},
          {"crosschecked", crosschecked},
          {"crosscheck_mismatches", crosscheck_mismatches},
          {"examples", examples}};
}

std::vector<Mask> valid_deletions(std::size_t n, std::size_t t, std::size_t k, const Rational& lambda) {
  if (t < 2) raise(Errc::TDegenerate, "t must be at least 2");
  if (n > 24) raise(Errc::SearchSpaceTooLarge, "deletion sets are enumerated for n <= 24 only");
  std::vector<Mask> out;
  for (Mask b = 0; b < (Mask{1} << n); ++b) {
    const Rational lhs(static_cast<std::int64_t>(std::popcount(b) * (t - 1)));
    if (lhs <= lambda * Rational(static_cast<std::int64_t>(k))) out.push_back(b);
  }
  return out;
}

namespace {

// Rank of the row structure `rows` under V_{n,k}(points) by elimination.
std::size_t rank_from_rows(const std::vector<RimRow>& rows, std::size_t k, std::size_t cols, const Field& f,
                           std::span<const std::uint64_t> points, std::vector<std::uint64_t>& buf) {
  buf.assign(rows.size() * cols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::uint64_t x = 1;
    const std::uint64_t a = points[rows[r].element];
    for (std::size_t c = 0; c < k; ++c) {
      buf[r * cols + rows[r].plus_block * k + c] = x;
      if (rows[r].minus_block) buf[r * cols + *rows[r].minus_block * k + c] = f.neg(x);
      x = f.mul(x, a);
    }
  }
  return detail::echelon(f, buf.data(), rows.size(), cols);
}

bool distinct_entries(const std::vector<std::size_t>& v) {
  std::set<std::size_t> s(v.begin(), v.end());
  return s.size() == v.size();
}

}  // namespace

std::size_t evaluated_rank(const SetSystem& sys, std::size_t k, const Field& field,
                           std::span<const std::uint64_t> points) {
  if (points.size() != sys.n()) raise(Errc::LengthMismatch, "need one point per ground element");
  std::vector<std::uint64_t> buf;
  return rank_from_rows(rim_rows(sys), k, (sys.t() - 1) * k, field, points, buf);
}

SweepStats sweep_family(std::size_t n, std::size_t t, std::size_t k, const Rational& lambda,
                        const SweepOptions& options) {
  if (!options.field) raise(Errc::InvalidArgument, "sweep needs a field");
  const Field& f = *options.field;
  SweepStats st;
  st.n = n;
  st.t = t;
  st.k = k;
  st.lambda = lambda;
  st.q = f.order();
  st.r = options.r.value_or(static_cast<std::size_t>(
      (lambda * Rational(static_cast<std::int64_t>(k)) / Rational(static_cast<std::int64_t>(t - 1)) + Rational(1))
          .floor()));
  const std::vector<Mask> deletions = valid_deletions(n, t, k, lambda);
  std::vector<Vec> alphas;
  Rng rng(options.seed);
  for (std::uint64_t a = 0; a < options.alphas; ++a) alphas.push_back(f.sample_distinct_raw(n, rng));

  CertifyOptions co;
  co.zero_test = options.zero_test;
  co.record_evidence = false;
  co.seed = options.seed;
  CertifyOptions grid = co;
  grid.zero_test = ZeroTest::Grid;
  const std::size_t cols = (t - 1) * k;
  std::vector<std::uint64_t> buf;
  auto note = [&](nlohmann::json j) {
    if (st.examples.size() < 8) st.examples.push_back(std::move(j));
  };

  for_each_admissible(
      n, k, t, lambda,
      [&](const SetSystem& sys) {
        ++st.systems;
        Certifier cert(sys, k, options.field, co);
        for (Mask b : deletions) {
          ++st.b_sets;
          if (!cert.round_data(b).full_rank) {
            ++st.rank_failures;
            note({{"kind", "rank"}, {"system", sys.to_json()}, {"B", b}});
          }
        }
        const std::vector<RimRow>& rows = cert.matrix().row_info();
        for (const Vec& alpha : alphas) {
          const CertificationOutcome out = cert.run(alpha, st.r);
          ++st.runs;
          switch (out.tag) {
            case Outcome::Fail:
              ++st.fails;
              note({{"kind", "fail"}, {"system", sys.to_json()}, {"alpha", alpha}});
              break;
            case Outcome::Success:
              ++st.successes;
              if (options.verify_success && rank_from_rows(rows, k, cols, f, alpha, buf) != cols) {
                ++st.success_unsound;
                note({{"kind", "unsound"}, {"system", sys.to_json()}, {"alpha", alpha}});
              }
              break;
            case Outcome::FaultyTuple:
              ++st.faulty_tuples;
              if (!distinct_entries(out.faulty)) {
                ++st.nondistinct;
                note({{"kind", "nondistinct"}, {"system", sys.to_json()}, {"alpha", alpha}});
              }
              break;
          }
          if (out.tag != Outcome::Success && rank_from_rows(rows, k, cols, f, alpha, buf) != cols) ++st.kernel_nonzero;
        }
        if (options.crosscheck_every != 0 && st.systems % options.crosscheck_every == 0) {
          Certifier g(sys, k, options.field, grid);
          const std::size_t m = std::min<std::size_t>(alphas.size(), options.crosscheck_alphas);
          for (std::size_t a = 0; a < m; ++a) {
            ++st.crosschecked;
            const CertificationOutcome x = cert.run(alphas[a], st.r), y = g.run(alphas[a], st.r);
            if (x.tag != y.tag || x.faulty != y.faulty || x.certificate != y.certificate) {
              ++st.crosscheck_mismatches;
              note({{"kind", "crosscheck"}, {"system", sys.to_json()}, {"alpha", alphas[a]}});
            }
          }
          st.dets += g.determinants_built();
          st.degree_violations += g.degree_violations();
        }
        st.dets += cert.determinants_built();
        st.degree_violations += cert.degree_violations();
        return true;
      },
      options.range);
  return st;
}

// ---- identity suite ---------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t size, Rng& rng) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.uniform(n - i)]);
  std::vector<std::size_t> out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(out.begin(), out.end());
  return out;
}

FieldMatrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f->random_raw(rng);
  }
  return m;
}

Check make_check(std::string name, bool pass, std::string detail, nlohmann::json data = nlohmann::json::object()) {
  return Check{std::move(name), pass, std::move(detail), std::move(data)};
}

// Streams keep independent sub-campaigns from sharing seeds.
enum Stream : std::uint64_t { kDuality = 1, kClaim = 2, kPartition = 3, kVandermonde = 4, kSweep = 5 };

// A generic-proxy agreement check; `draw` produces the matrix H for an instance.
template <typename Draw>
Check generic_agreement(const std::string& name, std::uint64_t samples, std::uint64_t seed, std::uint64_t stream,
                        Draw&& draw) {
  std::uint64_t agree = 0, redraw_fixed = 0;
  nlohmann::json logged = nlohmann::json::array();
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, stream, i));
    const std::size_t k = 1 + rng.uniform(4);
    const std::size_t n = k + rng.uniform(9 - k);  // k <= n <= 8
    const std::size_t l = 2 + rng.uniform(3);
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t j = 0; j < l; ++j) sets.push_back(random_subset(n, 1 + rng.uniform(k), rng));
    const std::int64_t formula = partition_formula(sets, k);
    const auto measured = static_cast<std::int64_t>(intersection_dim(draw(k, n, rng), sets));
    if (formula == measured) {
      ++agree;
      continue;
    }
    // Disagreements must vanish on a fresh draw of the matrix.
    bool fixed = false;
    for (int attempt = 0; attempt < 3 && !fixed; ++attempt) {
      fixed = static_cast<std::int64_t>(intersection_dim(draw(k, n, rng), sets)) == formula;
    }
    redraw_fixed += fixed;
    if (logged.size() < 20) {
      logged.push_back({{"instance", i}, {"k", k}, {"n", n}, {"sets", sets}, {"formula", formula},
                        {"measured", measured}, {"fixed_on_redraw", fixed}});
    }
  }
  const std::uint64_t disagree = samples - agree;
  const bool pass = agree * 100 >= samples * 99 && redraw_fixed == disagree;
  return make_check(name, pass,
                    std::to_string(agree) + "/" + std::to_string(samples) + " agree; " +
                        std::to_string(redraw_fixed) + "/" + std::to_string(disagree) + " resolved on redraw",
                    {{"agree", agree}, {"samples", samples}, {"disagreements", logged}});
}

}  // namespace

CampaignReport run_identity_suite(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = Clock::now();
  CampaignReport rep;
  rep.kind = "identities";
  rep.config = config.to_json();
  rep.seed = config.seed;
  const std::uint64_t samples = config.identity_samples;

  {  // Duality over four fields, every k in [1, n-1].
    const std::vector<FieldPtr> fields = {Field::make(7), Field::make(2, 8), Field::make(2, 16), Field::make(65537)};
    nlohmann::json per = nlohmann::json::array();
    std::uint64_t fails = 0, products = 0;
    for (std::size_t fi = 0; fi < fields.size(); ++fi) {
      const FieldPtr& f = fields[fi];
      std::uint64_t ok = 0;
      for (std::uint64_t i = 0; i < samples; ++i) {
        Rng rng(derive_seed(config.seed, kDuality, fi * samples + i));
        const std::size_t nmax = std::min<std::uint64_t>(8, f->order());
        const std::size_t n = 2 + rng.uniform(nmax - 1);
        const Vec pts = f->sample_distinct_raw(n, rng);
        bool all = true;
        for (std::size_t k = 1; k < n; ++k) {
          ++products;
          all = check_duality(f, pts, k) && all;
        }
        ok += all;
        fails += !all;
      }
      per.push_back({{"field", f->describe()}, {"tuples", samples}, {"passed", ok}});
    }
    rep.checks.push_back(make_check("duality", fails == 0,
                                    std::to_string(fails) + " failing tuples over " + std::to_string(products) +
                                        " products",
                                    {{"fields", per}}));
  }

  {  // Direct intersection vs block formula.
    const FieldPtr f = Field::make(101);
    std::uint64_t mismatches = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      Rng rng(derive_seed(config.seed, kClaim, i));
      const std::size_t k = 1 + rng.uniform(4);
      const std::size_t n = 2 + rng.uniform(7);
      const std::size_t l = 2 + rng.uniform(3);
      std::vector<std::vector<std::size_t>> sets;
      for (std::size_t j = 0; j < l; ++j) sets.push_back(random_subset(n, 1 + rng.uniform(n), rng));
      const FieldMatrix h = random_matrix(f, k, n, rng);
      mismatches += intersection_dim_direct(h, sets) != intersection_dim_block(h, sets);
    }
    rep.checks.push_back(make_check("claim_b1", mismatches == 0,
                                    std::to_string(mismatches) + " mismatches in " + std::to_string(samples)));
  }

  const FieldPtr big = Field::make(65537);
  rep.checks.push_back(generic_agreement("partition_vs_generic", samples, config.seed, kPartition,
                                         [&](std::size_t k, std::size_t n, Rng& rng) {
                                           return random_matrix(big, k, n, rng);
                                         }));
  rep.checks.push_back(generic_agreement("vandermonde_vs_generic", samples, config.seed, kVandermonde,
                                         [&](std::size_t k, std::size_t n, Rng& rng) {
                                           return vandermonde(big, big->sample_distinct_raw(n, rng), k).transpose();
                                         }));

  {  // Zero-kernel law on the configured family; determinant degrees ride along.
    SweepOptions so;
    so.field = config.field();
    so.alphas = config.sweep_alphas;
    so.seed = derive_seed(config.seed, kSweep, 0);
    so.r = config.r;
    so.zero_test = config.zero_test;
    // A non-grid zero test is shadowed by the grid on a subsample.
    so.crosscheck_every = config.zero_test == ZeroTest::Grid ? 0 : 50;
    const SweepStats st = sweep_family(config.n, config.t_or_default(), config.k, config.lambda_or_default(), so);
    rep.checks.push_back(make_check("zero_kernel", st.rank_failures == 0 && st.systems > 0,
                                    std::to_string(st.rank_failures) + " rank failures over " +
                                        std::to_string(st.b_sets) + " (system, B) pairs in " +
                                        std::to_string(st.systems) + " systems",
                                    st.to_json()));
    rep.checks.push_back(make_check("degree_bound", st.degree_violations == 0,
                                    std::to_string(st.degree_violations) + " of " + std::to_string(st.dets) +
                                        " determinants exceed (t-1)(k-1)"));
    if (config.sweep_alphas > 0) {
      rep.checks.push_back(make_check("certify_behaviour",
                                      st.fails == 0 && st.success_unsound == 0 && st.nondistinct == 0 &&
                                          st.crosscheck_mismatches == 0,
                                      std::to_string(st.runs) + " runs: " + std::to_string(st.fails) + " FAIL, " +
                                          std::to_string(st.success_unsound) + " unsound SUCCESS, " +
                                          std::to_string(st.nondistinct) + " repeated faulty indices, " +
                                          std::to_string(st.crosscheck_mismatches) + " grid cross-check mismatches"));
    }
  }
  if (config.timing) rep.wall_clock_s = seconds_since(t0);
  return rep;
}

// ---- Monte Carlo ------------------------------------------------------------------

namespace {

CampaignReport monte_carlo_kernel(const ExperimentConfig& config) {
  CampaignReport rep;
  rep.kind = "montecarlo";
  rep.config = config.to_json();
  rep.seed = config.seed;
  const std::size_t n = config.n, k = config.k, t = config.t_or_default();
  const std::size_t r = config.r_or_default();
  const Rational lambda = config.lambda_or_default();
  std::vector<SetSystem> family;
  if (config.system) {
    family.push_back(*config.system);
  } else {
    family = enumerate_admissible(n, k, t, lambda);
  }
  if (family.empty()) raise(Errc::ConfigInvalid, "no admissible system for these parameters");
  std::vector<FieldPtr> fields;
  if (config.q_sweep.empty()) {
    fields.push_back(config.field());
  } else {
    for (std::uint64_t q : config.q_sweep) fields.push_back(field_of_order(q));
  }
  CertifyOptions co;
  co.zero_test = config.zero_test;
  co.record_evidence = false;
  co.seed = config.seed;
  const std::size_t cols = (t - 1) * k;

  struct PerQ {
    std::uint64_t q, kernels = 0, fails = 0, unsound = 0, nondistinct = 0, successes = 0, max_tuple = 0;
    double bound_union, bound_tuple;
  };
  std::vector<PerQ> per;
  std::vector<std::uint64_t> buf;
  for (std::size_t qi = 0; qi < fields.size(); ++qi) {
    const FieldPtr& f = fields[qi];
    const std::uint64_t q = f->order();
    const BoundReport b = failure_bound(t, n, k, q, r, GlobalBoundInput{config.L, config.eps});
    rep.bounds.push_back(b.to_json());
    PerQ pq{q, 0, 0, 0, 0, 0, 0, to_double(b.union_bound), to_double(b.per_tuple)};
    std::map<std::size_t, std::unique_ptr<Certifier>> certs;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::uint64_t> tuples;
    for (std::uint64_t i = 0; i < config.trials; ++i) {
      const std::uint64_t seed = derive_seed(config.seed, qi, i);
      Rng rng(seed);
      const Vec alpha = f->sample_distinct_raw(n, rng);
      const std::size_t si = family.size() == 1 ? 0 : rng.uniform(family.size());
      auto& cert = certs[si];
      if (!cert) cert = std::make_unique<Certifier>(family[si], k, f, co);
      const CertificationOutcome out = cert->run(alpha, r);
      const bool kernel = rank_from_rows(cert->matrix().row_info(), k, cols, *f, alpha, buf) != cols;
      pq.kernels += kernel;
      pq.fails += out.tag == Outcome::Fail;
      pq.successes += out.tag == Outcome::Success;
      pq.unsound += out.tag == Outcome::Success && kernel;
      if (out.tag == Outcome::FaultyTuple) {
        pq.nondistinct += !distinct_entries(out.faulty);
        pq.max_tuple = std::max(pq.max_tuple, ++tuples[{si, out.faulty}]);
      }
      rep.trials.push_back({i, seed, q, n, k, t, r, kernel ? "KERNEL" : "FULL_RANK", pq.bound_union,
                            static_cast<double>(pq.kernels) / static_cast<double>(i + 1)});
    }
    per.push_back(pq);
  }

  const auto trials = config.trials;
  nlohmann::json sweep = nlohmann::json::array();
  for (const PerQ& pq : per) {
    const std::string tag = "_q" + std::to_string(pq.q);
    const double freq = static_cast<double>(pq.kernels) / static_cast<double>(trials);
    const double bu = std::min(1.0, pq.bound_union), bt = std::min(1.0, pq.bound_tuple);
    const double limit_u = pq.bound_union + 3 * binomial_sigma(bu, trials);
    const double tuple_freq = static_cast<double>(pq.max_tuple) / static_cast<double>(trials);
    const double limit_t = pq.bound_tuple + 3 * binomial_sigma(bt, trials);
    const Interval ci = clopper_pearson(pq.kernels, trials);
    rep.checks.push_back(make_check("union_bound" + tag, freq <= limit_u,
                                    "kernel frequency " + fmt_double(freq) + " vs bound+3sigma " + fmt_double(limit_u),
                                    {{"kernels", pq.kernels}, {"trials", trials}, {"bound", pq.bound_union},
                                     {"cp99", {ci.lo, ci.hi}}}));
    rep.checks.push_back(make_check("per_tuple_bound" + tag, tuple_freq <= limit_t,
                                    "most frequent (system, tuple) " + fmt_double(tuple_freq) + " vs bound+3sigma " +
                                        fmt_double(limit_t)));
    rep.checks.push_back(make_check("never_fail" + tag, pq.fails == 0, std::to_string(pq.fails) + " FAIL outcomes"));
    rep.checks.push_back(make_check("success_sound" + tag, pq.unsound == 0,
                                    std::to_string(pq.unsound) + " SUCCESS runs with a nonzero kernel"));
    rep.checks.push_back(make_check("faulty_distinct" + tag, pq.nondistinct == 0,
                                    std::to_string(pq.nondistinct) + " faulty tuples with repeats"));
    sweep.push_back({{"q", pq.q}, {"kernels", pq.kernels}, {"frequency", freq}, {"successes", pq.successes},
                     {"union_bound", pq.bound_union}, {"per_tuple_bound", pq.bound_tuple},
                     {"cp99", {ci.lo, ci.hi}}});
  }
  // Frequencies should not increase with q beyond 2 pooled sigma.
  for (std::size_t i = 0; i + 1 < per.size(); ++i) {
    const double a = static_cast<double>(per[i].kernels) / static_cast<double>(trials);
    const double b = static_cast<double>(per[i + 1].kernels) / static_cast<double>(trials);
    const double s = std::sqrt(std::pow(binomial_sigma(a, trials), 2) + std::pow(binomial_sigma(b, trials), 2));
    rep.checks.push_back(make_check("monotone_q" + std::to_string(per[i].q) + "_q" + std::to_string(per[i + 1].q),
                                    b <= a + 2 * s, fmt_double(a) + " -> " + fmt_double(b) + " (2 sigma " +
                                                        fmt_double(2 * s) + ")"));
  }
  rep.summary = {{"family_size", family.size()}, {"r", r}, {"lambda", lambda.to_string()}, {"sweep", sweep}};
  return rep;
}

CampaignReport monte_carlo_oracle(const ExperimentConfig& config) {
  CampaignReport rep;
  rep.kind = "montecarlo";
  rep.config = config.to_json();
  rep.seed = config.seed;
  const FieldPtr f = config.field();
  const std::size_t n = config.n, k = config.k, L = config.L;
  ParamInput pin;
  pin.eps = config.eps;
  pin.c = config.c;
  pin.n = n;
  pin.k = k;
  pin.L = L;
  const TheoremParams tp = theorem_params(pin);
  rep.summary["params"] = tp.to_json();
  const double per_code = std::pow(2.0, -(config.c - Rational(2)).to_double() * static_cast<double>(n));
  const bool honest = tp.required_q && BigInt(f->order()) >= *tp.required_q;
  rep.checks.push_back(make_check("honest_q", honest,
                                  "q = " + std::to_string(f->order()) + ", required " +
                                      (tp.required_q ? tp.required_q->str() : std::string("none"))));
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const std::uint64_t seed = derive_seed(config.seed, 0, i);
    Rng rng(seed);
    const PuncturedRSCode code = random_puncture(f, n, k, rng);
    const Verdict v = is_avg_list_decodable(code, tp.radius, L, config.caps);
    violations += !v.decodable;
    rep.trials.push_back({i, seed, f->order(), n, k, L + 1, tp.r_by_t.back().second,
                          v.decodable ? "DECODABLE" : "VIOLATION", per_code,
                          static_cast<double>(violations) / static_cast<double>(i + 1)});
  }
  const std::uint64_t limit = binomial_upper_quantile(config.trials, per_code, 0.99);
  const Interval ci = clopper_pearson(violations, config.trials);
  rep.checks.push_back(make_check("violations_within_binomial99", violations <= limit,
                                  std::to_string(violations) + " violations, 99% binomial limit " +
                                      std::to_string(limit),
                                  {{"violations", violations}, {"trials", config.trials}, {"per_code_bound", per_code},
                                   {"cp99", {ci.lo, ci.hi}}}));
  rep.summary["violations"] = violations;
  rep.summary["radius"] = tp.radius.to_string();
  return rep;
}

}  // namespace

CampaignReport run_monte_carlo(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = Clock::now();
  CampaignReport rep = config.mc_mode == "oracle" ? monte_carlo_oracle(config) : monte_carlo_kernel(config);
  if (config.timing) rep.wall_clock_s = seconds_since(t0);
  return rep;
}

// ---- roundtrip ------------------------------------------------------------------

CampaignReport run_roundtrip(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = Clock::now();
  CampaignReport rep;
  rep.kind = "roundtrip";
  rep.config = config.to_json();
  rep.seed = config.seed;
  const FieldPtr f = config.field();
  const std::size_t n = config.n, k = config.k, L = config.L;
  const Rational lambda = config.lambda_or_default();
  // rho = (L/(L+1))(1 - R - eps) with eps = lambda k / n.
  const Rational eps_eff = lambda * Rational(static_cast<std::int64_t>(k)) / Rational(static_cast<std::int64_t>(n));
  const Rational rho = Rational(static_cast<std::int64_t>(L), static_cast<std::int64_t>(L + 1)) *
                       (Rational(1) - Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)) - eps_eff);
  if (rho < Rational(0)) raise(Errc::ConfigInvalid, "radius is negative for these parameters");

  std::uint64_t harvested = 0, witness_failures = 0, certify_checked = 0, certify_bad = 0, decodable_codes = 0;
  std::map<std::size_t, std::uint64_t> by_t;
  nlohmann::json examples = nlohmann::json::array();
  auto note = [&](nlohmann::json j) {
    if (examples.size() < 8) examples.push_back(std::move(j));
  };
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const std::uint64_t seed = derive_seed(config.seed, 0, i);
    Rng rng(seed);
    const PuncturedRSCode code = random_puncture(f, n, k, rng);
    const FieldMatrix g = code.generator();
    std::uint64_t found = 0;
    bool certified_one = false;
    for_each_violation(
        code, rho, L,
        [&](const Violation& v) {
          ++found;
          try {
            const Witness w = witness_from_violation(code, v.center, v.words, lambda);
            const Vec rv = ReducedIntersectionMatrix::from_generator(w.system, g).matrix().apply(w.kernel_vector);
            const bool in_kernel = std::all_of(rv.begin(), rv.end(), [](std::uint64_t x) { return x == 0; });
            const bool nonzero = std::any_of(w.kernel_vector.begin(), w.kernel_vector.end(),
                                             [](std::uint64_t x) { return x != 0; });
            const bool admissible = check_admissible(w.system, k, lambda).admissible();
            if (!(in_kernel && nonzero && admissible)) {
              ++witness_failures;
              note({{"code", code.to_json()}, {"violation", v.to_json()}, {"in_kernel", in_kernel},
                    {"nonzero", nonzero}, {"admissible", admissible}});
            }
            ++by_t[w.t];
            if (!certified_one) {
              // A kernel exists at these points, so certification must not claim SUCCESS.
              certified_one = true;
              ++certify_checked;
              const std::size_t rt = static_cast<std::size_t>(
                  (lambda * Rational(static_cast<std::int64_t>(k)) / Rational(static_cast<std::int64_t>(w.t - 1)) +
                   Rational(1))
                      .floor());
              const auto out = certify_full_column_rank(w.system, k, f, code.points(), rt);
              if (out.tag != Outcome::FaultyTuple) {
                ++certify_bad;
                note({{"code", code.to_json()}, {"system", w.system.to_json()}, {"certify", out.to_json()}});
              }
            }
          } catch (const Error& e) {
            ++witness_failures;
            note({{"code", code.to_json()}, {"violation", v.to_json()}, {"error", e.what()}});
          }
          return config.max_violations_per_code == 0 || found < config.max_violations_per_code;
        },
        config.caps);
    harvested += found;
    decodable_codes += found == 0;
    rep.trials.push_back({i, seed, f->order(), n, k, L + 1, config.r_or_default(),
                          found == 0 ? "DECODABLE" : "VIOLATED", 0.0, static_cast<double>(found)});
  }
  rep.checks.push_back(make_check("witness_verified", witness_failures == 0,
                                  std::to_string(witness_failures) + " failures over " + std::to_string(harvested) +
                                      " violations"));
  rep.checks.push_back(make_check("witness_certify_consistent", certify_bad == 0,
                                  std::to_string(certify_bad) + " of " + std::to_string(certify_checked) +
                                      " witnessed systems certified as SUCCESS or FAIL"));
  if (config.min_violations > 0) {
    rep.checks.push_back(make_check("harvest", harvested >= config.min_violations,
                                    std::to_string(harvested) + " violations harvested, target " +
                                        std::to_string(config.min_violations)));
  }
  nlohmann::json ts = nlohmann::json::object();
  for (auto [t, c] : by_t) ts[std::to_string(t)] = c;
  rep.summary = {{"rho", rho.to_string()},        {"lambda", lambda.to_string()}, {"violations", harvested},
                 {"decodable_codes", decodable_codes}, {"witness_t", ts}, {"examples", examples}};
  if (config.timing) rep.wall_clock_s = seconds_since(t0);
  return rep;
}

}  // namespace rslab
