// Copyright 2026 The fracrev Authors.
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

#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "fracrev/boolean.hpp"
#include "fracrev/cayley.hpp"
#include "fracrev/constructions.hpp"
#include "fracrev/fr_engine.hpp"
#include "fracrev/oracle.hpp"

namespace fracrev {
namespace {

CayleyGraph RandomGraph(const FiniteAbelianGroup& group, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<GroupElement> s;
  for (const GroupElement& g : group.Elements()) {
    const GroupElement neg = group.Negate(g);
    if (g == group.Zero() || neg < g || !coin(rng)) continue;
    s.insert(g);
    s.insert(neg);
  }
  std::vector<GroupElement> raw(s.begin(), s.end());
  return CayleyGraph::Make(group, raw);
}

void BM_SpectrumCyclic(benchmark::State& state) {
  const auto group = FiniteAbelianGroup::Make({2, state.range(0)});
  const auto graph = RandomGraph(group, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ComputeSpectrum(graph, SpectrumMethod::kGeneric));
  state.SetComplexityN(group.order());
}
BENCHMARK(BM_SpectrumCyclic)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_SpectrumCublike(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto group = FiniteAbelianGroup::Make(std::vector<Int>(n, 2));
  const auto graph = RandomGraph(group, 2);
  const auto method = state.range(1) ? SpectrumMethod::kWalsh : SpectrumMethod::kGeneric;
  for (auto _ : state) benchmark::DoNotOptimize(ComputeSpectrum(graph, method));
}
BENCHMARK(BM_SpectrumCublike)->ArgsProduct({{6, 8, 10}, {0, 1}});

void BM_WalshTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = MaioranaMcFarlandBent(n);
  for (auto _ : state) benchmark::DoNotOptimize(WalshTransform(f));
}
BENCHMARK(BM_WalshTransform)->DenseRange(8, 16, 4);

void BM_SearchAll(benchmark::State& state) {
  const auto c = BuildBentFamily(MaioranaMcFarlandBent(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(SearchAll(c.graph));
}
BENCHMARK(BM_SearchAll)->Arg(4)->Arg(6);

void BM_VerifyFR(benchmark::State& state) {
  const auto c = BuildRamanujanFamily(3, static_cast<int>(state.range(0)), {});
  for (auto _ : state) benchmark::DoNotOptimize(VerifyFR(c.graph, c.predicted));
}
BENCHMARK(BM_VerifyFR)->Arg(2)->Arg(3);

}  // namespace
}  // namespace fracrev

BENCHMARK_MAIN();
