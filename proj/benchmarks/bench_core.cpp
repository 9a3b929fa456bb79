// Copyright 2026 The hyperell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hyperell/picard.hpp"
#include "hyperell/sampling.hpp"
#include "hyperell/strata.hpp"

using namespace hyperell;

static void BM_Discriminant(benchmark::State& state) {
  Sampler rng(1);
  const unsigned g = static_cast<unsigned>(state.range(0));
  const BinaryForm f = rng.smooth_form(g, FieldTag::rational(), 50);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant)->DenseRange(2, 6);

static void BM_DiscriminantFp(benchmark::State& state) {
  Sampler rng(2);
  const BinaryForm f = rng.smooth_form(static_cast<unsigned>(state.range(0)), FieldTag::prime(1000003));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_DiscriminantFp)->DenseRange(2, 10, 2);

static void BM_AutGroupDihedral(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  const FieldTag f = default_probe_field(g);
  const PointConfiguration c(f, form_roots(dihedral_probe(g, f)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(c).order());
}
BENCHMARK(BM_AutGroupDihedral)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_AutGroupRandom(benchmark::State& state) {
  Sampler rng(3);
  const PointConfiguration c = rng.configuration(FieldTag::prime(1000003), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(c).order());
}
BENCHMARK(BM_AutGroupRandom)->Arg(6)->Arg(12)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_LemmaSearch(benchmark::State& state) {
  // (1 2)(3 4)(5 6) followed by one cycle through the remaining points.
  const auto n = static_cast<unsigned>(state.range(0));
  std::vector<std::vector<unsigned>> cycles{{1, 2}, {3, 4}, {5, 6}};
  if (n > 6) {
    cycles.emplace_back();
    for (unsigned k = 7; k <= n; ++k) cycles.back().push_back(k);
  }
  const Permutation rho = Permutation::from_cycles(n, cycles);
  for (auto _ : state) benchmark::DoNotOptimize(find_lemma_pairs(rho).has_value());
}
BENCHMARK(BM_LemmaSearch)->Arg(6)->Arg(8)->Arg(9);

static void BM_LemmaVerify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_combin(static_cast<unsigned>(state.range(0))).rows.size());
}
BENCHMARK(BM_LemmaVerify)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Descent(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(descent_subgroup(g).subgroup.size());
}
BENCHMARK(BM_Descent)->Arg(2)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
