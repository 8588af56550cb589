// Copyright 2026 The ecx authors
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

#include "ecx/cocritical.hpp"
#include "ecx/coloring.hpp"
#include "ecx/criticality.hpp"
#include "ecx/graph.hpp"

namespace {

void BM_ChiPetersen(benchmark::State& state) {
  const ecx::SimpleGraph g = ecx::petersen_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::chromatic_index_exact(g));
  }
}
BENCHMARK(BM_ChiPetersen);

void BM_ChiCompleteOdd(benchmark::State& state) {
  // odd complete graphs are the hardest refutations at this scale
  const ecx::SimpleGraph g = ecx::complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::chromatic_index_exact(g));
  }
}
BENCHMARK(BM_ChiCompleteOdd)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_VizingConstruction(benchmark::State& state) {
  std::mt19937 rng(3);
  const int n = 40;
  ecx::SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 4 == 0) g.link(u, v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::vizing_plus_one_coloring(g));
  }
}
BENCHMARK(BM_VizingConstruction);

void BM_SaturationCheck(benchmark::State& state) {
  const ecx::SimpleGraph g =
      ecx::disjoint_union(ecx::cycle_graph(4), ecx::complete_graph(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::is_saturated_class1(g));
  }
}
BENCHMARK(BM_SaturationCheck);

void BM_CoCriticalCheck(benchmark::State& state) {
  const ecx::SimpleGraph g = ecx::construct_extremal(10, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::is_p3k_cocritical(g, 3));
  }
}
BENCHMARK(BM_CoCriticalCheck);

}  // namespace
