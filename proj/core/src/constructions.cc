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

#include "blockperm/constructions.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "blockperm/hamiltonian.h"
#include "blockperm/parallel_scan.h"

namespace blockperm {
namespace {

void CheckScanGuard(int n, const ScanOptions& options) {
  if (n < 2) throw std::invalid_argument("syndrome classes need n >= 2");
  if (n > options.max_n) {
    throw GuardExceeded("syndrome class scan: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(options.max_n));
  }
}

void CheckDesignDistance(int d) {
  if (d < 2) throw std::invalid_argument("syndrome needs design distance d >= 2");
}

struct ClassScanState {
  std::vector<FieldElement> scratch;
  std::vector<FieldElement> values;
  std::vector<std::vector<int>> hits;
  std::map<std::vector<FieldElement>, std::uint64_t> sizes;
};

}  // namespace

bool InSyndromeClass(const Permutation& p, const Syndrome& f,
                     const PairEncoder& enc) {
  return ComputeSyndrome(p, f.d, enc) == f;
}

CodeBook SyndromeClass(int n, int d, const Syndrome& f,
                       const ScanOptions& options) {
  CheckScanGuard(n, options);
  CheckDesignDistance(d);
  if (f.d != d || f.values.size() != static_cast<std::size_t>(d - 1)) {
    throw std::invalid_argument("syndrome must have d - 1 = " +
                                std::to_string(d - 1) + " coordinates");
  }
  const PairEncoder enc(n, SelectPrime(n));
  auto states = ScanSymmetricGroup<ClassScanState>(
      n, ResolveThreadCount(options.threads),
      [&](ClassScanState& s, std::span<const int> image) {
        ComputeSyndrome(image, d, enc, s.scratch, s.values);
        if (s.values == f.values) {
          s.hits.emplace_back(image.begin(), image.end());
        }
      });
  std::vector<Permutation> words;
  for (auto& s : states) {
    for (const auto& w : s.hits) words.push_back(Permutation::FromOneLine(w));
  }
  return CodeBook(n, d, kProvenanceSyndrome, std::move(words));
}

std::map<Syndrome, std::uint64_t> SyndromeClassSizes(int n, int d,
                                                     const ScanOptions& options) {
  CheckScanGuard(n, options);
  CheckDesignDistance(d);
  const PairEncoder enc(n, SelectPrime(n));
  auto states = ScanSymmetricGroup<ClassScanState>(
      n, ResolveThreadCount(options.threads),
      [&](ClassScanState& s, std::span<const int> image) {
        ComputeSyndrome(image, d, enc, s.scratch, s.values);
        ++s.sizes[s.values];
      });
  std::map<Syndrome, std::uint64_t> merged;
  for (const auto& s : states) {
    for (const auto& [values, count] : s.sizes) merged[Syndrome{d, values}] += count;
  }
  return merged;
}

CodeBook LargestSyndromeClass(int n, int d, const ScanOptions& options) {
  const auto sizes = SyndromeClassSizes(n, d, options);
  const Syndrome* best = nullptr;
  std::uint64_t best_size = 0;
  for (const auto& [syn, count] : sizes) {
    if (count > best_size) {
      best = &syn;
      best_size = count;
    }
  }
  return SyndromeClass(n, d, *best, options);
}

CodeBook CyclicClassCode(int n, std::int64_t max_words) {
  if (n < 2) throw std::invalid_argument("cyclic class code needs n >= 2");
  if (Factorial(n - 1) > max_words) {
    throw GuardExceeded("cyclic class code for n = " + std::to_string(n) +
                        " has more than " + std::to_string(max_words) + " words");
  }
  std::vector<int> head(static_cast<std::size_t>(n - 1));
  std::iota(head.begin(), head.end(), 1);
  std::vector<Permutation> words;
  do {
    std::vector<int> w = head;
    w.push_back(n);
    words.push_back(Permutation::FromOneLine(w));
  } while (std::next_permutation(head.begin(), head.end()));
  return CodeBook(n, 2, kProvenanceCyclic, std::move(words));
}

std::vector<int> EvenNSteps(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("even-n construction needs even n >= 2, got " +
                                std::to_string(n));
  }
  const int p = n / 2;
  std::vector<int> a(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= p; ++i) a[static_cast<std::size_t>(2 * i - 2)] = 2 * i - 1;
  for (int i = 1; i <= p - 1; ++i) a[static_cast<std::size_t>(2 * i - 1)] = 2 * p - 2 * i;
  return a;
}

CodeBook EvenNCode(int n) {
  const std::vector<int> a = EvenNSteps(n);
  std::vector<Permutation> words;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> w{i};
    int acc = i;
    for (int step : a) {
      acc = (acc + step) % n;
      w.push_back(acc == 0 ? n : acc);
    }
    words.push_back(Permutation::FromOneLine(w));
  }
  return CodeBook(n, n - 1, kProvenanceEven, std::move(words));
}

CodeBook Zn1Code(int n) {
  if (n < 1 || !IsPrime(static_cast<std::uint64_t>(n) + 1)) {
    throw std::invalid_argument("Z_{n+1} construction needs n + 1 prime, got n = " +
                                std::to_string(n));
  }
  std::vector<Permutation> words;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> w;
    for (int j = 1; j <= n; ++j) w.push_back(static_cast<int>(static_cast<long long>(i) * j % (n + 1)));
    words.push_back(Permutation::FromOneLine(w));
  }
  return CodeBook(n, n - 1, kProvenanceZn1, std::move(words));
}

std::optional<CodeBook> HamDecompCode(int n, int max_n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("Hamiltonian decomposition code needs odd n, got " +
                                std::to_string(n));
  }
  if (n > max_n) {
    throw GuardExceeded("Hamiltonian decomposition search: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(max_n));
  }
  const HamiltonianSearchResult r = FindHamiltonianDecomposition(n);
  if (r.status != HamiltonianSearchResult::Status::kFound) return std::nullopt;
  std::vector<Permutation> words;
  for (const auto& cycle : r.cycles) {
    words.push_back(Permutation::FromOneLine(
        std::span<const int>(cycle).subspan(1)));
  }
  return CodeBook(n, n - 1, kProvenanceHamDecomp, std::move(words));
}

}  // namespace blockperm
