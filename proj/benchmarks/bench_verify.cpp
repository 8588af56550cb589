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

#include "ecx/verify.hpp"

namespace {

void BM_VerifyLowerCell(benchmark::State& state) {
  ecx::VerifyOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::verify_lower(7, 2, opts));
  }
}
BENCHMARK(BM_VerifyLowerCell)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_VerifySongCell(benchmark::State& state) {
  ecx::VerifyOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecx::verify_song(7, 2, opts));
  }
}
BENCHMARK(BM_VerifySongCell)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

}  // namespace
