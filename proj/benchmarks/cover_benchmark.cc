// Copyright 2026 The hhcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hhcover/cover.h"
#include "hhcover/families.h"
#include "hhcover/harness.h"
#include "hhcover/matching.h"
#include "hhcover/theorem.h"

namespace hhcover {
namespace {

Graph RandomGraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

// Chromatic-number instances: rho of the stable sets of G(n, 1/2).
void BM_MinCoverStableSets(benchmark::State& state) {
  const auto h = MaximalGenerators(StableSetFamily(RandomGraph(state.range(0), 0.5, 7)));
  for (auto _ : state) benchmark::DoNotOptimize(MinCover(h).rho);
  state.counters["generators"] = static_cast<double>(h.generators().size());
}
BENCHMARK(BM_MinCoverStableSets)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_RandomHereditaryRho(benchmark::State& state) {
  const auto instances = RandomHereditary({.n = static_cast<int>(state.range(0)),
                                           .mode = GeneratorMode::kRandom,
                                           .seed = 3,
                                           .sample_count = 50,
                                           .max_generator_count = 10});
  for (auto _ : state) {
    for (const auto& h : instances) benchmark::DoNotOptimize(Rho(h));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(instances.size()));
}
BENCHMARK(BM_RandomHereditaryRho)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_MaxMatching(benchmark::State& state) {
  const Graph g = RandomGraph(state.range(0), 4.0 / state.range(0), 11);
  for (auto _ : state) benchmark::DoNotOptimize(MaxMatching(g).size());
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(2)->Range(8, 64);

void BM_FactorCritical(benchmark::State& state) {
  const Graph g = CycleGraph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FactorCritical(g).has_value());
}
BENCHMARK(BM_FactorCritical)->Arg(11)->Arg(31)->Arg(63);

void BM_MaximalGeneratorsStable(benchmark::State& state) {
  const auto family = StableSetFamily(RandomGraph(state.range(0), 0.3, 5));
  GeneratorOptions options;
  options.monotonicity_samples = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaximalGenerators(family, options).generators().size());
  }
}
BENCHMARK(BM_MaximalGeneratorsStable)->DenseRange(10, 30, 10)->Unit(benchmark::kMicrosecond);

void BM_ClassifyC5(benchmark::State& state) {
  const auto h = MaximalGenerators(StableSetFamily(CycleGraph(5)));
  for (auto _ : state) benchmark::DoNotOptimize(ClassifyCritical(h).kind);
}
BENCHMARK(BM_ClassifyC5);

void BM_VerifyExhaustive(benchmark::State& state) {
  const GeneratorConfig cfg{.n = static_cast<int>(state.range(0)),
                            .mode = GeneratorMode::kExhaustive};
  for (auto _ : state) benchmark::DoNotOptimize(VerifyUniverse(cfg, 1).instances_checked);
}
BENCHMARK(BM_VerifyExhaustive)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hhcover

BENCHMARK_MAIN();
