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

// Command-line front end. Flags mirror ExperimentConfig; values from
// --config <file> override flags. Exit status: 0 when every check passes,
// 1 on a failed check, 2 on a configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rslab/certify.hpp"
#include "rslab/harness.hpp"
#include "rslab/oracle.hpp"
#include "rslab/rng.hpp"
#include "rslab/rscode.hpp"

namespace {

using namespace rslab;
using nlohmann::json;

constexpr int kExitPass = 0, kExitCheckFailed = 1, kExitConfig = 2;

// Flag values land here as JSON so that one parser handles flags and files.
struct FlagSet {
  json values = json::object();
  std::string config_path;

  template <typename T>
  void bind(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<T>(flag, [this, key](const T& v) { values[key] = v; }, help);
  }

  void attach(CLI::App* app) {
    bind<std::uint64_t>(app, "--p", "p", "field characteristic");
    bind<unsigned>(app, "--m", "m", "extension degree");
    bind<std::vector<std::uint64_t>>(app, "--modulus", "modulus", "monic modulus, low degree first");
    bind<std::size_t>(app, "--n", "n", "code length / ground set size");
    bind<std::size_t>(app, "--k", "k", "dimension");
    bind<std::size_t>(app, "--t", "t", "number of sets");
    bind<std::size_t>(app, "--L", "L", "list size");
    bind<std::string>(app, "--eps", "eps", "epsilon as a rational");
    bind<std::string>(app, "--c", "c", "constant c > 2");
    bind<std::string>(app, "--delta", "delta", "capacity-mode delta");
    bind<std::string>(app, "--lambda", "lambda", "lambda override");
    bind<std::size_t>(app, "--r", "r", "round count override");
    bind<std::uint64_t>(app, "--trials", "trials", "trial count");
    bind<std::uint64_t>(app, "--seed", "seed", "master seed");
    bind<std::uint64_t>(app, "--max-codewords", "max_codewords", "oracle cap on q^k");
    bind<std::uint64_t>(app, "--max-tuples", "max_tuples", "oracle cap on tuples");
    bind<std::string>(app, "--zero-test", "zero_test", "grid, symbolic or randomized");
    bind<std::string>(app, "--mc-mode", "mc_mode", "kernel or oracle");
    bind<std::vector<std::uint64_t>>(app, "--q-sweep", "q_sweep", "field orders to sweep");
    app->add_option_function<std::string>(
        "--system",
        [this](const std::string& s) {
          try {
            values["system"] = json::parse(s);
          } catch (const json::exception& e) {
            throw CLI::ValidationError("--system", e.what());
          }
        },
        "set system as JSON {n, t, sets}");
    bind<std::uint64_t>(app, "--identity-samples", "identity_samples", "instances per identity");
    bind<std::uint64_t>(app, "--sweep-alphas", "sweep_alphas", "certification runs per system");
    bind<std::uint64_t>(app, "--min-violations", "min_violations", "roundtrip harvest target");
    bind<std::uint64_t>(app, "--max-violations-per-code", "max_violations_per_code", "0 for unlimited");
    bind<std::string>(app, "--json-out", "json_out", "write the JSON report here");
    bind<std::string>(app, "--csv-out", "csv_out", "write the CSV report here");
    app->add_flag_function("--timing", [this](std::int64_t) { values["timing"] = true; }, "record wall clock");
    app->add_option("--config", config_path, "JSON config; its values override flags");
  }

  ExperimentConfig resolve() const {
    ExperimentConfig c = ExperimentConfig::from_json(values);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) raise(Errc::ConfigInvalid, "cannot read config file '" + config_path + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        raise(Errc::ConfigInvalid, std::string("config file is not JSON: ") + e.what());
      }
      c = ExperimentConfig::from_json(j, c);
    }
    c.validate();
    return c;
  }
};

int finish(const CampaignReport& rep, const ExperimentConfig& c) {
  if (!c.json_out.empty()) emit_report(rep, ReportFormat::Json, c.json_out);
  if (!c.csv_out.empty()) emit_report(rep, ReportFormat::Csv, c.csv_out);
  for (const Check& ch : rep.checks) {
    std::printf("%s %s: %s\n", ch.pass ? "PASS" : "FAIL", ch.name.c_str(), ch.detail.c_str());
  }
  if (rep.wall_clock_s) std::printf("wall clock %.3fs\n", *rep.wall_clock_s);
  return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

Vec points_or_random(const std::vector<std::uint64_t>& given, const ExperimentConfig& c, const FieldPtr& f) {
  if (!given.empty()) {
    if (given.size() != c.n) raise(Errc::ConfigInvalid, "need exactly n points");
    for (std::uint64_t x : given)
      if (x >= f->order()) raise(Errc::ConfigInvalid, "point outside the field");
    return given;
  }
  Rng rng(c.seed);
  return f->sample_distinct_raw(c.n, rng);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rslab: experiments on list decoding of randomly punctured Reed-Solomon codes"};
  app.require_subcommand(1);
  FlagSet flags;
  std::vector<std::uint64_t> points;
  std::string rho_text, mode = "main";

  auto* identities = app.add_subcommand("identities", "exact identity suite and exhaustive sweeps");
  auto* montecarlo = app.add_subcommand("montecarlo", "Monte Carlo against the probability bounds");
  auto* roundtrip = app.add_subcommand("roundtrip", "oracle violations to kernel witnesses");
  auto* certify = app.add_subcommand("certify", "certify one set system at one point tuple");
  auto* oracle = app.add_subcommand("oracle", "brute-force list decodability of one code");
  auto* params = app.add_subcommand("params", "theorem parameter calculator");
  for (auto* sub : {identities, montecarlo, roundtrip, certify, oracle, params}) flags.attach(sub);
  certify->add_option("--points", points, "evaluation points (default: random from the seed)");
  oracle->add_option("--points", points, "evaluation points (default: random from the seed)");
  oracle->add_option("--rho", rho_text, "radius (default: (L/(L+1))(1-R-eps))");
  params->add_option("--mode", mode, "main or capacity")->check(CLI::IsMember({"main", "capacity"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    const ExperimentConfig c = flags.resolve();
    if (identities->parsed()) return finish(run_identity_suite(c), c);
    if (montecarlo->parsed()) return finish(run_monte_carlo(c), c);
    if (roundtrip->parsed()) return finish(run_roundtrip(c), c);
    if (certify->parsed()) {
      if (!c.system) raise(Errc::ConfigInvalid, "certify needs --system");
      const FieldPtr f = c.field();
      const Vec pts = points_or_random(points, c, f);
      const auto out = certify_full_column_rank(*c.system, c.k, f, pts, c.r_or_default(),
                                                CertifyOptions{c.zero_test});
      json j = out.to_json();
      j["points"] = pts;
      j["r"] = c.r_or_default();
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
    if (oracle->parsed()) {
      const FieldPtr f = c.field();
      const PuncturedRSCode code(f, c.k, points_or_random(points, c, f));
      Rational rho;
      if (rho_text.empty()) {
        const auto L = static_cast<std::int64_t>(c.L);
        rho = Rational(L, L + 1) * (Rational(1) - code.rate() - c.eps);
      } else {
        try {
          rho = Rational::parse(rho_text);
        } catch (const Error& e) {
          raise(Errc::ConfigInvalid, std::string("--rho: ") + e.what());
        }
      }
      const Verdict v = is_avg_list_decodable(code, rho, c.L, c.caps);
      json j = v.to_json();
      j["code"] = code.to_json();
      j["min_distance"] = min_distance(code, c.caps).to_string();
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
    ParamInput in;
    in.mode = mode == "capacity" ? ParamMode::Capacity : ParamMode::Main;
    in.eps = c.eps;
    in.c = c.c;
    in.delta = c.delta;
    in.n = c.n;
    in.k = c.k;
    in.L = c.L;
    std::cout << theorem_params(in).to_json().dump(2) << "\n";
    return kExitPass;
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", std::string(errc_name(e.code())).c_str(), e.what());
    return kExitConfig;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
