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

#ifndef BLOCKPERM_PARALLEL_SCAN_H_
#define BLOCKPERM_PARALLEL_SCAN_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace blockperm {

// Writes the rank-th permutation of [n] in lexicographic order (0-based rank)
// into `out`, labels 1..n.
void UnrankLexicographic(int n, std::uint64_t rank, std::vector<int>& out);

std::uint64_t FactorialU64(int n);

// Visits every permutation of [n] in lexicographic order. The rank range
// [0, n!) is split into contiguous chunks, one per worker; each worker owns a
// default-constructed State and calls visit(state, image) for each
// permutation in its chunk. Returns the per-worker states in chunk order so
// the caller can merge them deterministically.
template <typename State, typename Visit>
std::vector<State> ScanSymmetricGroup(int n, int threads, Visit visit) {
  const std::uint64_t total = FactorialU64(n);
  const auto workers = static_cast<std::uint64_t>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(threads, static_cast<std::int64_t>(total))));
  std::vector<State> states(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

  auto run_chunk = [&](std::uint64_t w) {
    try {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      if (begin == end) return;
      std::vector<int> image;
      UnrankLexicographic(n, begin, image);
      State& state = states[static_cast<std::size_t>(w)];
      for (std::uint64_t r = begin; r < end; ++r) {
        visit(state, std::span<const int>(image));
        std::next_permutation(image.begin(), image.end());
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return states;
}

}  // namespace blockperm

#endif  // BLOCKPERM_PARALLEL_SCAN_H_
