// Copyright 2026 The blockperm Authors.
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

#include "blockperm/constructions.h"
#include "blockperm/enumeration.h"

namespace {

void BM_EnumerateSpheres(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::EnumerateSpheres(n, {.threads = 1}));
}
BENCHMARK(BM_EnumerateSpheres)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_MyersCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::MyersCount(n, n / 2));
}
BENCHMARK(BM_MyersCount)->Arg(10)->Arg(40);

void BM_SyndromeClassSizes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::SyndromeClassSizes(n, 3, {.threads = 1}));
}
BENCHMARK(BM_SyndromeClassSizes)->DenseRange(6, 7)->Unit(benchmark::kMillisecond);

}  // namespace
