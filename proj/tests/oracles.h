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

// Test-only reference implementations. Each one takes a route that is
// independent of the library code it is compared against.
#ifndef BLOCKPERM_TESTS_ORACLES_H_
#define BLOCKPERM_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "blockperm/permutation.h"

namespace blockperm::testing {

inline std::vector<std::vector<int>> AllImages(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Permutation> AllPermutations(int n) {
  std::vector<Permutation> out;
  for (const auto& v : AllImages(n)) out.push_back(Permutation::FromOneLine(v));
  return out;
}

inline Permutation RandomPermutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::FromOneLine(v);
}

// Adjacency set as an ordered std::set of pairs.
inline std::set<std::pair<int, int>> PairSet(std::span<const int> image) {
  std::set<std::pair<int, int>> s;
  for (std::size_t i = 0; i + 1 < image.size(); ++i) s.emplace(image[i], image[i + 1]);
  return s;
}

// |A(a) \ A(b)| by explicit set difference.
inline int SetDifferenceDistance(std::span<const int> a, std::span<const int> b) {
  const auto sa = PairSet(a);
  const auto sb = PairSet(b);
  int d = 0;
  for (const auto& p : sa) d += sb.count(p) ? 0 : 1;
  return d;
}

// Elementary symmetric polynomials e_1..e_m of `values` mod q by explicit
// subset enumeration.
inline std::vector<std::uint64_t> ElementarySymmetricBySubsets(
    const std::vector<std::uint64_t>& values, int m, std::uint64_t q) {
  std::vector<std::uint64_t> e(static_cast<std::size_t>(m), 0);
  const std::size_t k = values.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    const int bits = __builtin_popcountll(mask);
    if (bits > m) continue;
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) prod = prod * values[i] % q;
    }
    auto& slot = e[static_cast<std::size_t>(bits - 1)];
    slot = (slot + prod) % q;
  }
  return e;
}

}  // namespace blockperm::testing

#endif  // BLOCKPERM_TESTS_ORACLES_H_
