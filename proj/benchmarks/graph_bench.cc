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

#include "blockperm/graph.h"

namespace {

void BM_BuildGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::BuildGraph(n, 3, {.threads = 1}));
}
BENCHMARK(BM_BuildGraph)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

void BM_ExactIndependentSet(benchmark::State& state) {
  const blockperm::BlockGraph g = blockperm::BuildGraph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::ExactIndependentSet(g));
}
BENCHMARK(BM_ExactIndependentSet)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_NeighborhoodStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::ComputeNeighborhoodStats(n, 3, {.threads = 1}));
}
BENCHMARK(BM_NeighborhoodStats)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
