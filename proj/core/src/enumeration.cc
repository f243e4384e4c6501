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

#include "blockperm/enumeration.h"

#include <string>

#include "blockperm/parallel_scan.h"

namespace blockperm {

std::uint64_t FactorialU64(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("n! does not fit 64 bits");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

void UnrankLexicographic(int n, std::uint64_t rank, std::vector<int>& out) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  out.clear();
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = FactorialU64(i - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
}

std::uint64_t SphereProfile::Total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

SphereProfile EnumerateSpheres(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > options.max_n) {
    throw GuardExceeded("sphere enumeration: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(options.max_n));
  }
  using Counts = std::vector<std::uint64_t>;
  auto partial = ScanSymmetricGroup<Counts>(
      n, ResolveThreadCount(options.threads),
      [n](Counts& c, std::span<const int> image) {
        if (c.empty()) c.assign(static_cast<std::size_t>(n), 0);
        ++c[static_cast<std::size_t>(DistanceToIdentity(image))];
      });
  SphereProfile profile{n, Counts(static_cast<std::size_t>(n), 0)};
  for (const auto& c : partial) {
    for (std::size_t k = 0; k < c.size(); ++k) profile.counts[k] += c[k];
  }
  return profile;
}

BigInt MyersCount(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("Myers count needs 1 <= k <= n-1, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
  }
  BigRational sum = 0;
  for (int i = 0; i <= k; ++i) {
    BigRational term(BigInt(i + 1), Factorial(k - i));
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigRational value = BigRational(Factorial(k) * Binomial(n - 1, k)) * sum;
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error("Myers count is not integral");
  }
  return boost::multiprecision::numerator(value);
}

BallSize BallSizeExact(int n, int t, const EnumerationOptions& options) {
  if (t < 0 || t > n - 1) {
    throw std::out_of_range("ball radius must lie in [0, n-1]");
  }
  const SphereProfile profile = EnumerateSpheres(n, options);
  BallSize ball{n, t, 0};
  for (int k = 0; k <= t; ++k) ball.size += profile.counts[static_cast<std::size_t>(k)];
  return ball;
}

bool BallBoundsHypothesisHolds(int n, int t) {
  const long long m = static_cast<long long>(n) - t - 1;
  return t >= 0 && m >= 0 && m * m >= n;
}

std::pair<BigInt, BigInt> BallSizeBounds(int n, int t) {
  if (!BallBoundsHypothesisHolds(n, t)) {
    throw std::out_of_range("ball size bounds need t <= n - sqrt(n) - 1; got n=" +
                            std::to_string(n) + " t=" + std::to_string(t));
  }
  return {FallingProduct(n, 1, t), FallingProduct(n, 0, t)};
}

}  // namespace blockperm
