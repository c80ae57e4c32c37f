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

// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is 0 when the set of failing criteria equals --expect-fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "golden_params.hpp"
#include "rslab/certify.hpp"
#include "rslab/harness.hpp"
#include "rslab/oracle.hpp"
#include "rslab/rng.hpp"

namespace {

using namespace rslab;

// ---- pinned tolerances and sizes ----------------------------------------------
constexpr std::uint64_t kIdentitySamples = 200;
constexpr double kGenericAgreement = 0.99;       // enforced inside the identity suite
constexpr std::uint64_t kAlphasPerSystem = 1000;
constexpr std::uint64_t kMonteCarloTrials = 1000;
constexpr double kSigmaUnion = 3.0;              // enforced inside the campaign checks
constexpr double kSigmaTrend = 2.0;
constexpr std::uint64_t kMinHarvest = 10000;
constexpr std::uint64_t kCodesPerGridPoint = 20;
constexpr std::uint64_t kMinDistanceCap = 100000;  // q^k
constexpr std::size_t kMinGoldenTuples = 10;
constexpr std::uint64_t kHonestCodes = 1000;

struct Line {
  std::string id;
  bool pass = false;
  std::string title, detail;
  double seconds = 0.0;
};

struct Runner {
  std::vector<Line> lines;
  nlohmann::json details = nlohmann::json::object();
  std::uint64_t seed = 1;

  template <typename F>
  void run(const std::string& id, const std::string& title, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Line line{id, false, title, ""};
    try {
      body(line);
    } catch (const std::exception& e) {
      line.pass = false;
      line.detail = std::string("error: ") + e.what();
    }
    line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %-3s %s: %s (%.1fs)\n", line.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(),
                line.detail.c_str(), line.seconds);
    std::fflush(stdout);
    lines.push_back(std::move(line));
  }
};

const Check& need(const CampaignReport& r, const std::string& name) {
  const Check* c = r.find(name);
  if (!c) throw std::runtime_error("report lacks check " + name);
  return *c;
}

std::string join_checks(const CampaignReport& r) {
  std::string out;
  for (const Check& c : r.checks) {
    if (!c.pass) out += (out.empty() ? "" : "; ") + c.name + " [" + c.detail + "]";
  }
  return out.empty() ? std::to_string(r.checks.size()) + " checks pass" : "failing: " + out;
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 2; x <= q; ++x) {
    try {
      field_of_order(x);
      out.push_back(x);
    } catch (const Error&) {
    }
  }
  return out;
}

// First system of the lambda = 0 family at (7, 3, 3) whose certification
// reports a faulty tuple on one of the first few point tuples over GF(11).
SetSystem faulty_prone_system(std::uint64_t seed) {
  const FieldPtr f = field_of_order(11);
  std::optional<SetSystem> found;
  Rng rng(seed);
  std::vector<Vec> alphas;
  for (int i = 0; i < 64; ++i) alphas.push_back(f->sample_distinct_raw(7, rng));
  CertifyOptions co;
  co.zero_test = ZeroTest::Symbolic;
  co.record_evidence = false;
  for_each_admissible(7, 3, 3, Rational(0), [&](const SetSystem& sys) {
    Certifier c(sys, 3, f, co);
    for (const Vec& a : alphas) {
      if (c.run(a, 1).tag == Outcome::FaultyTuple) {
        found = sys;
        return false;
      }
    }
    return true;
  });
  if (!found) throw std::runtime_error("no faulty-prone system found");
  return *found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rslab acceptance run"};
  std::vector<std::string> expect_fail;
  std::string json_path;
  Runner R;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail (documented as unattainable)");
  app.add_option("--json", json_path, "write per-criterion details to this file");
  app.add_option("--seed", R.seed, "master seed");
  CLI11_PARSE(app, argc, argv);

  // Identity suite over the first exhaustive family: n=6, t=2, k=2, lambda=1/2.
  ExperimentConfig idc;
  idc.p = 13;
  idc.n = 6;
  idc.k = 2;
  idc.t = 2;
  idc.lambda = Rational(1, 2);
  idc.identity_samples = kIdentitySamples;
  idc.sweep_alphas = kAlphasPerSystem;
  idc.zero_test = ZeroTest::Symbolic;
  idc.seed = R.seed;
  CampaignReport ids;
  R.run("1", "duality identity", [&](Line& l) {
    ids = run_identity_suite(idc);
    R.details["identities"] = ids.to_json();
    const Check& c = need(ids, "duality");
    l.pass = c.pass;
    l.detail = c.detail + " (GF(7), GF(2^8), GF(2^16), GF(65537); 200 tuples each)";
  });
  R.run("2", "intersection block identity", [&](Line& l) {
    const Check& c = need(ids, "claim_b1");
    l.pass = c.pass;
    l.detail = c.detail;
  });
  R.run("3", "partition formula vs generic", [&](Line& l) {
    const Check& c = need(ids, "partition_vs_generic");
    l.pass = c.pass;
    l.detail = c.detail + ", threshold " + std::to_string(static_cast<int>(kGenericAgreement * 100)) + "%";
  });
  R.run("4", "Vandermonde equals generic", [&](Line& l) {
    const Check& c = need(ids, "vandermonde_vs_generic");
    l.pass = c.pass;
    l.detail = c.detail + ", threshold " + std::to_string(static_cast<int>(kGenericAgreement * 100)) + "%";
  });

  // Second exhaustive family: n=8, t=3, k=2, lambda=1/2 over GF(251).
  SweepStats fam2, fam0;
  R.run("6", "zero-kernel law", [&](Line& l) {
    SweepOptions so;
    so.field = field_of_order(251);
    so.alphas = kAlphasPerSystem;
    so.seed = derive_seed(R.seed, 6, 0);
    so.zero_test = ZeroTest::Symbolic;
    so.crosscheck_every = 997;
    fam2 = sweep_family(8, 3, 2, Rational(1, 2), so);
    R.details["family_8_3_2"] = fam2.to_json();
    const Check& c = need(ids, "zero_kernel");
    l.pass = c.pass && fam2.rank_failures == 0 && fam2.systems > 0;
    l.detail = "(6,2,2,1/2): " + c.detail + "; (8,3,2,1/2): " + std::to_string(fam2.rank_failures) +
               " rank failures over " + std::to_string(fam2.b_sets) + " pairs in " + std::to_string(fam2.systems) +
               " systems";
  });
  R.run("7", "certification behaviour", [&](Line& l) {
    const Check& c = need(ids, "certify_behaviour");
    const bool ok2 = fam2.fails == 0 && fam2.success_unsound == 0 && fam2.nondistinct == 0 &&
                     fam2.crosscheck_mismatches == 0 && fam2.runs == fam2.systems * kAlphasPerSystem;
    l.pass = c.pass && ok2;
    l.detail = "(6,2,2,1/2): " + c.detail + "; (8,3,2,1/2): " + std::to_string(fam2.runs) + " runs, " +
               std::to_string(fam2.fails) + " FAIL, " + std::to_string(fam2.success_unsound) + " unsound, " +
               std::to_string(fam2.faulty_tuples) + " faulty (" + std::to_string(fam2.nondistinct) +
               " repeated), " + std::to_string(fam2.crosscheck_mismatches) + "/" +
               std::to_string(fam2.crosschecked) + " grid mismatches";
  });
  R.run("7s", "certification where faulty tuples occur (7,3,3,0) GF(11)", [&](Line& l) {
    SweepOptions so;
    so.field = field_of_order(11);
    so.alphas = 10;
    so.seed = derive_seed(R.seed, 7, 0);
    so.zero_test = ZeroTest::Symbolic;
    so.crosscheck_every = 997;
    fam0 = sweep_family(7, 3, 3, Rational(0), so);
    R.details["family_7_3_3"] = fam0.to_json();
    l.pass = fam0.fails == 0 && fam0.success_unsound == 0 && fam0.nondistinct == 0 && fam0.rank_failures == 0 &&
             fam0.crosscheck_mismatches == 0 && fam0.faulty_tuples > 0;
    l.detail = std::to_string(fam0.systems) + " systems, " + std::to_string(fam0.runs) + " runs, " +
               std::to_string(fam0.faulty_tuples) + " faulty, " + std::to_string(fam0.kernel_nonzero) +
               " with a kernel, 0 expected FAIL/unsound: " + std::to_string(fam0.fails) + "/" +
               std::to_string(fam0.success_unsound);
  });
  R.run("5", "determinant degree bound", [&](Line& l) {
    std::uint64_t violations = fam2.degree_violations + fam0.degree_violations, dets = fam2.dets + fam0.dets;
    const Check& c = need(ids, "degree_bound");
    l.pass = c.pass && violations == 0 && dets > 0;
    l.detail = "identity sweep: " + c.detail + "; other sweeps: " + std::to_string(violations) + " of " +
               std::to_string(dets);
  });

  R.run("8", "probability bounds and q trend", [&](Line& l) {
    ExperimentConfig mc;
    mc.n = 6;
    mc.k = 2;
    mc.t = 2;
    mc.eps = Rational(1, 2);
    mc.trials = kMonteCarloTrials;
    mc.q_sweep = {251, 1009, 4093};
    mc.seed = R.seed;
    const CampaignReport rep = run_monte_carlo(mc);
    R.details["montecarlo_t2"] = rep.to_json();
    l.pass = rep.all_pass();
    l.detail = "r=" + rep.summary["r"].dump() + ", " + join_checks(rep) + " (union + " +
               std::to_string(static_cast<int>(kSigmaUnion)) + " sigma, trend within " +
               std::to_string(static_cast<int>(kSigmaTrend)) + " sigma)";
    for (const Check& c : rep.checks)
      if (c.name.rfind("union_bound", 0) == 0) l.detail += "; " + c.name + ": " + c.detail;
  });
  R.run("8s", "probability bounds at t=3 where kernels occur", [&](Line& l) {
    ExperimentConfig mc;
    mc.n = 7;
    mc.k = 3;
    mc.t = 3;
    mc.eps = Rational(0);
    mc.trials = kMonteCarloTrials;
    mc.q_sweep = {11, 31, 101};
    mc.system = faulty_prone_system(R.seed);
    mc.seed = R.seed;
    const CampaignReport rep = run_monte_carlo(mc);
    R.details["montecarlo_t3"] = rep.to_json();
    l.pass = rep.all_pass();
    l.detail = "system " + mc.system->to_string() + ", " + join_checks(rep);
    for (const Check& c : rep.checks)
      if (c.name.rfind("union_bound", 0) == 0) l.detail += "; " + c.name + ": " + c.detail;
  });

  R.run("9", "reduction-lemma roundtrip (q<=17, n<=6, k<=2, L<=2)", [&](Line& l) {
    std::uint64_t harvested = 0, grid_points = 0, codes = 0;
    bool witnesses_ok = true;
    for (std::uint64_t q : prime_powers_upto(17)) {
      const FieldPtr f = field_of_order(q);
      for (std::size_t n = 2; n <= std::min<std::uint64_t>(6, q); ++n) {
        for (std::size_t k = 1; k <= std::min<std::size_t>(2, n - 1); ++k) {
          for (std::size_t L = 1; L <= 2; ++L) {
            ExperimentConfig rc;
            rc.p = f->characteristic();
            rc.m = f->degree();
            rc.n = n;
            rc.k = k;
            rc.L = L;
            rc.eps = Rational(0);
            rc.trials = kCodesPerGridPoint;
            rc.seed = derive_seed(R.seed, 9, grid_points);
            const CampaignReport rep = run_roundtrip(rc);
            harvested += rep.summary["violations"].get<std::uint64_t>();
            witnesses_ok = witnesses_ok && rep.all_pass();
            ++grid_points;
            codes += rc.trials;
          }
        }
      }
    }
    l.pass = witnesses_ok && harvested >= kMinHarvest;
    l.detail = std::to_string(harvested) + " violations over " + std::to_string(codes) + " codes at " +
               std::to_string(grid_points) + " grid points (target " + std::to_string(kMinHarvest) +
               "), witnesses " + (witnesses_ok ? "all verified" : "FAILED");
    R.details["roundtrip_grid"] = {{"violations", harvested}, {"codes", codes}, {"grid_points", grid_points}};
  });
  R.run("9s", "roundtrip harvest at q=7, n=6, k=3, L=2", [&](Line& l) {
    ExperimentConfig rc;
    rc.p = 7;
    rc.n = 6;
    rc.k = 3;
    rc.L = 2;
    rc.eps = Rational(0);
    rc.trials = 5;
    rc.min_violations = kMinHarvest;
    rc.seed = R.seed;
    const CampaignReport rep = run_roundtrip(rc);
    R.details["roundtrip_k3"] = rep.summary;
    l.pass = rep.all_pass();
    l.detail = rep.summary["violations"].dump() + " violations, witness sizes " + rep.summary["witness_t"].dump() +
               ", " + join_checks(rep);
  });

  R.run("10", "minimum distance", [&](Line& l) {
    std::uint64_t codes = 0, bad = 0;
    Rng rng(derive_seed(R.seed, 10, 0));
    for (std::uint64_t q : prime_powers_upto(32)) {
      const FieldPtr f = field_of_order(q);
      for (std::size_t n = 1; n <= std::min<std::uint64_t>(8, q); ++n) {
        std::uint64_t qk = 1;
        for (std::size_t k = 1; k <= n; ++k) {
          qk *= q;
          if (qk > kMinDistanceCap) break;
          for (int s = 0; s < 3; ++s) {
            const PuncturedRSCode code = random_puncture(f, n, k, rng);
            ++codes;
            OracleCaps caps;
            caps.max_codewords = kMinDistanceCap;
            bad += min_distance(code, caps) !=
                   Rational(static_cast<std::int64_t>(n - k + 1), static_cast<std::int64_t>(n));
          }
        }
      }
    }
    l.pass = bad == 0 && codes > 0;
    l.detail = std::to_string(bad) + " mismatches over " + std::to_string(codes) +
               " codes (all prime powers q <= 32, n <= 8, q^k <= 1e5)";
  });

  R.run("11", "theorem parameter golden values", [&](Line& l) {
    const auto cases = golden_params();
    std::size_t ok = 0;
    bool eps_zero = false;
    for (const GoldenParams& g : cases) {
      const TheoremParams p = theorem_params({g.mode, g.eps, g.c, g.delta, g.n, g.k, g.L});
      ok += p.L == g.want_L && p.lambda == g.want_lambda && p.radius == g.want_radius && p.r_by_t == g.want_r &&
            p.required_q == g.want_q;
      eps_zero = eps_zero || (g.eps == Rational(0) && p.lambda == Rational(0) && p.r_by_t.front().second == 1);
    }
    l.pass = ok == cases.size() && cases.size() >= kMinGoldenTuples && eps_zero;
    l.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " tuples match, eps=0 case " +
               (eps_zero ? "present" : "missing");
  });

  R.run("12", "end-to-end at honest q for k=1", [&](Line& l) {
    ExperimentConfig oc;
    oc.p = 2;
    oc.m = 2;
    oc.n = 4;
    oc.k = 1;
    oc.L = 1;
    oc.eps = Rational(1, 2);
    oc.c = Rational(3);
    oc.trials = kHonestCodes;
    oc.mc_mode = "oracle";
    oc.seed = R.seed;
    const CampaignReport rep = run_monte_carlo(oc);
    R.details["honest_k1"] = rep.to_json();
    l.pass = rep.all_pass();
    l.detail = "GF(4), radius " + rep.summary["radius"].get<std::string>() + ": " +
               need(rep, "violations_within_binomial99").detail + "; " + need(rep, "honest_q").detail;
  });

  std::set<std::string> failing, expected(expect_fail.begin(), expect_fail.end());
  for (const Line& l : R.lines)
    if (!l.pass) failing.insert(l.id);
  std::size_t passed = R.lines.size() - failing.size();
  std::printf("%zu/%zu criteria lines pass", passed, R.lines.size());
  if (!expected.empty()) {
    std::string s;
    for (const auto& e : expected) s += (s.empty() ? "" : ",") + e;
    std::printf("; expected failures: %s", s.c_str());
  }
  std::printf("\n");
  if (!json_path.empty()) {
    nlohmann::json out;
    for (const Line& l : R.lines)
      out["criteria"].push_back({{"id", l.id}, {"pass", l.pass}, {"title", l.title}, {"detail", l.detail},
                                 {"seconds", l.seconds}});
    out["details"] = R.details;
    std::ofstream(json_path) << out.dump(2) << "\n";
  }
  if (failing != expected) {
    for (const auto& f : failing)
      if (!expected.count(f)) std::printf("unexpected failure: criterion %s\n", f.c_str());
    for (const auto& e : expected)
      if (!failing.count(e)) std::printf("criterion %s was expected to fail but passed\n", e.c_str());
    return 1;
  }
  return 0;
}
