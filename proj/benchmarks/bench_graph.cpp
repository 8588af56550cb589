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
#include <vector>

#include "ecx/canonical.hpp"
#include "ecx/enumerate.hpp"
#include "ecx/graph.hpp"
#include "ecx/graph6.hpp"

namespace {

std::vector<ecx::SimpleGraph> random_graphs(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<ecx::SimpleGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    ecx::SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) g.link(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

void BM_CanonicalFormRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 256, 42);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::canonical_form(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(6)->Arg(8)->Arg(10);

void BM_CanonicalFormRegular(benchmark::State& state) {
  // degree partitioning gives no cut on regular graphs; this is the slow path
  const ecx::SimpleGraph g = ecx::petersen_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalFormRegular);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::count_graphs(n));
  }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto graphs = random_graphs(20, 64, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& g = graphs[i++ % graphs.size()];
    benchmark::DoNotOptimize(ecx::parse_graph6(ecx::encode_graph6(g)));
  }
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace
