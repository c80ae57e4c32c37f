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

#include <benchmark/benchmark.h>

#include "rslab/certify.hpp"
#include "rslab/linalg.hpp"
#include "rslab/oracle.hpp"
#include "rslab/rng.hpp"
#include "rslab/rscode.hpp"

namespace {

using namespace rslab;

void BM_FieldMul(benchmark::State& state, std::uint64_t p, unsigned m) {
  const FieldPtr f = make_field(p, m);
  Rng rng(1);
  std::vector<std::uint64_t> xs(1024);
  for (auto& x : xs) x = f->random_raw(rng);
  std::uint64_t acc = 1;
  for (auto _ : state) {
    for (std::uint64_t x : xs) acc = f->mul(acc, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK_CAPTURE(BM_FieldMul, gf251, 251, 1);
BENCHMARK_CAPTURE(BM_FieldMul, gf2_16, 2, 16);
BENCHMARK_CAPTURE(BM_FieldMul, gf251_3, 251, 3);
BENCHMARK_CAPTURE(BM_FieldMul, mersenne61, (std::uint64_t{1} << 61) - 1, 1);

void BM_DetPolyVandermonde(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyMatrix v = symbolic_vandermonde(n, n, make_field(65537));
  for (auto _ : state) benchmark::DoNotOptimize(det_poly(v));
}
BENCHMARK(BM_DetPolyVandermonde)->DenseRange(2, 5);

void BM_RankField(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldPtr f = make_field(65537);
  Rng rng(2);
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f->random_raw(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankField)->RangeMultiplier(2)->Range(8, 64);

// One certification run with cached structure, the inner loop of the sweeps.
void BM_CertifyRun(benchmark::State& state) {
  const FieldPtr f = make_field(251);
  const auto sys = SetSystem::from_lists(8, {{1, 2, 3, 4, 5}, {1, 2, 6, 7}, {3, 4, 6, 8}});
  CertifyOptions co;
  co.record_evidence = false;
  co.zero_test = ZeroTest::Symbolic;
  Certifier cert(sys, 2, f, co);
  Rng rng(3);
  std::vector<Vec> alphas;
  for (int i = 0; i < 256; ++i) alphas.push_back(f->sample_distinct_raw(8, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cert.run(alphas[i++ & 255], 1));
}
BENCHMARK(BM_CertifyRun);

// Building rank, selection and determinant for a fresh system.
void BM_CertifyStructure(benchmark::State& state) {
  const FieldPtr f = make_field(251);
  const auto sys = SetSystem::from_lists(8, {{1, 2, 3, 4, 5}, {1, 2, 6, 7}, {3, 4, 6, 8}});
  for (auto _ : state) {
    Certifier cert(sys, 2, f);
    benchmark::DoNotOptimize(cert.round_data(0));
  }
}
BENCHMARK(BM_CertifyStructure);

void BM_OracleScan(benchmark::State& state) {
  const FieldPtr f = make_field(7);
  Rng rng(4);
  const PuncturedRSCode code = random_puncture(f, 6, 2, rng);
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_avg_list_decodable(code, Rational(1, 3), L));
}
BENCHMARK(BM_OracleScan)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
