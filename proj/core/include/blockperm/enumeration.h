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

#ifndef BLOCKPERM_ENUMERATION_H_
#define BLOCKPERM_ENUMERATION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "blockperm/common.h"
#include "blockperm/permutation.h"

namespace blockperm {

// counts[k] = |R(n, k)|, the number of permutations at block distance k
// from the identity, for k = 0..n-1.
struct SphereProfile {
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t Total() const;
  friend bool operator==(const SphereProfile&, const SphereProfile&) = default;
};

struct BallSize {
  int n = 0;
  int t = 0;
  BigInt size;

  friend bool operator==(const BallSize&, const BallSize&) = default;
};

struct EnumerationOptions {
  int max_n = Guards{}.max_enumeration_n;
  int threads = 0;  // see ResolveThreadCount
};

// Full scan of S_n. Throws GuardExceeded when n > options.max_n.
SphereProfile EnumerateSpheres(int n, const EnumerationOptions& options = {});

// Closed form for |R(n, k)|, 1 <= k <= n - 1, evaluated in exact rational
// arithmetic:
//   k! * C(n-1, k) * sum_{i=0..k} (-1)^(k-i) (i+1) / (k-i)!
// Throws std::out_of_range for k outside [1, n-1] and std::logic_error if the
// sum does not come out integral.
BigInt MyersCount(int n, int k);

// |b_B(n, t)| from the sphere profile. Throws std::out_of_range unless
// 0 <= t <= n - 1.
BallSize BallSizeExact(int n, int t, const EnumerationOptions& options = {});

// True iff t <= n - sqrt(n) - 1, tested as n-t-1 >= 0 and (n-t-1)^2 >= n.
bool BallBoundsHypothesisHolds(int n, int t);

// (prod_{i=1..t} (n-i), prod_{i=0..t} (n-i)). Throws std::out_of_range when
// the hypothesis above fails.
std::pair<BigInt, BigInt> BallSizeBounds(int n, int t);

}  // namespace blockperm

#endif  // BLOCKPERM_ENUMERATION_H_
