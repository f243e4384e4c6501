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

#include <algorithm>
#include <numeric>
#include <random>

#include "blockperm/permutation.h"
#include "blockperm/prime_field.h"

namespace {

blockperm::Permutation Shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return blockperm::Permutation::FromOneLine(v);
}

void BM_BlockDistance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto a = Shuffled(n, rng);
  const auto b = Shuffled(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::BlockDistance(a, b));
}
BENCHMARK(BM_BlockDistance)->Arg(8)->Arg(64)->Arg(1024);

void BM_DistanceByDefinition(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto a = Shuffled(n, rng);
  const auto b = Shuffled(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::DistanceByDefinition(a, b));
}
BENCHMARK(BM_DistanceByDefinition)->DenseRange(5, 8);

void BM_Syndrome(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const blockperm::PairEncoder enc(n, blockperm::SelectPrime(n));
  const auto p = Shuffled(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(blockperm::ComputeSyndrome(p, 5, enc));
}
BENCHMARK(BM_Syndrome)->Arg(8)->Arg(64);

}  // namespace
