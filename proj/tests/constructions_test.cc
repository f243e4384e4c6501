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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "blockperm/codebook.h"
#include "blockperm/parallel_scan.h"
#include "blockperm/prime_field.h"
#include "oracles.h"

namespace blockperm {
namespace {

using testing::AllPermutations;
using testing::PairSet;

int BruteMinDistance(const std::vector<Permutation>& words) {
  int best = words.empty() ? 0 : words.front().size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, testing::SetDifferenceDistance(words[i].image(), words[j].image()));
    }
  }
  return best;
}

// Every ordered pair (x, y), x != y, appears as an adjacency in exactly one word.
bool PartitionsOrderedPairs(const CodeBook& code) {
  std::set<std::pair<int, int>> seen;
  std::size_t total = 0;
  for (const auto& w : code.words()) {
    const auto s = PairSet(w.image());
    total += s.size();
    seen.insert(s.begin(), s.end());
  }
  const std::size_t n = static_cast<std::size_t>(code.n());
  return total == seen.size() && seen.size() == n * (n - 1);
}

TEST(CodeBookTest, RejectsDuplicatesAndWrongSize) {
  const auto id = Permutation::Identity(3);
  EXPECT_THROW(CodeBook(3, 2, "x", {id, id}), std::invalid_argument);
  EXPECT_THROW(CodeBook(3, 2, "x", {Permutation::Identity(4)}), std::invalid_argument);
}

TEST(CodeBookTest, MinDistance) {
  CodeBook code(4, 3, "x",
                {Permutation::FromOneLine({1, 2, 3, 4}), Permutation::FromOneLine({4, 3, 2, 1}),
                 Permutation::FromOneLine({2, 1, 4, 3})});
  EXPECT_FALSE(code.verified_min_distance());
  // (4 3 2 1) and (2 1 4 3) share (2,1) and (4,3).
  EXPECT_EQ(VerifyMinDistance(code), 1);
  EXPECT_EQ(code.verified_min_distance(), 1);
  EXPECT_EQ(MinDistance(CodeBook(4, 3, "x", {Permutation::Identity(4)})), 4);
  EXPECT_THROW(MinDistance(code, 2), GuardExceeded);
}

TEST(SyndromeClassTest, MembershipMatchesSubsetOracle) {
  const int n = 5;
  const int d = 3;
  const PairEncoder enc(n, SelectPrime(n));
  const std::uint64_t q = enc.field().modulus();
  const Syndrome f{d, {3, 7}};
  std::vector<Permutation> expected;
  for (const auto& p : AllPermutations(n)) {
    std::vector<std::uint64_t> gammas;
    for (int i = 0; i + 1 < n; ++i) gammas.push_back(enc.Encode(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]));
    const auto e = testing::ElementarySymmetricBySubsets(gammas, d - 1, q);
    if (e[0] == 3 && e[1] == 7) expected.push_back(p);
    EXPECT_EQ(InSyndromeClass(p, f, enc), e[0] == 3 && e[1] == 7);
  }
  const CodeBook code = SyndromeClass(n, d, f);
  EXPECT_EQ(code.words(), expected);
  EXPECT_EQ(code.provenance(), kProvenanceSyndrome);
}

TEST(SyndromeClassTest, SizesPartitionTheGroup) {
  struct Case {
    int n, d;
    std::size_t classes;
  };
  for (const Case c : {Case{5, 3, 55}, Case{5, 4, 60}, Case{6, 3, 208}, Case{6, 4, 352}}) {
    const auto sizes = SyndromeClassSizes(c.n, c.d);
    EXPECT_EQ(sizes.size(), c.classes) << c.n << "," << c.d;
    std::uint64_t total = 0;
    for (const auto& [s, count] : sizes) total += count;
    EXPECT_EQ(total, FactorialU64(c.n));
  }
}

TEST(SyndromeClassTest, LargestClasses) {
  struct Case {
    int n, d;
    std::size_t size;
  };
  for (const Case c : {Case{5, 3, 4}, Case{5, 4, 2}, Case{6, 3, 8}, Case{6, 4, 4}, Case{7, 3, 26}}) {
    const CodeBook code = LargestSyndromeClass(c.n, c.d);
    EXPECT_EQ(code.size(), c.size) << c.n << "," << c.d;
    EXPECT_GE(BruteMinDistance(code.words()), c.d);
  }
}

TEST(SyndromeClassTest, ThreadCountDoesNotChangeResult) {
  EXPECT_EQ(SyndromeClassSizes(6, 3, {.threads = 1}), SyndromeClassSizes(6, 3, {.threads = 4}));
  EXPECT_EQ(LargestSyndromeClass(6, 4, {.threads = 1}), LargestSyndromeClass(6, 4, {.threads = 3}));
}

TEST(SyndromeClassTest, Guard) {
  EXPECT_THROW(SyndromeClassSizes(9, 3), GuardExceeded);
  EXPECT_THROW(SyndromeClassSizes(6, 3, {.max_n = 5}), GuardExceeded);
}

TEST(CyclicClassCodeTest, Small) {
  const CodeBook c3 = CyclicClassCode(3);
  EXPECT_EQ(c3.size(), 2u);
  const CodeBook c4 = CyclicClassCode(4);
  EXPECT_EQ(c4.size(), 6u);
  EXPECT_EQ(BruteMinDistance(c4.words()), 2);
  EXPECT_EQ(c4.provenance(), kProvenanceCyclic);
}

TEST(CyclicClassCodeTest, DistanceTwoUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    const CodeBook c = CyclicClassCode(n);
    EXPECT_EQ(BigInt(c.size()), Factorial(n - 1));
    EXPECT_EQ(BruteMinDistance(c.words()), 2) << n;
  }
  EXPECT_THROW(CyclicClassCode(12), GuardExceeded);
}

TEST(EvenNCodeTest, Steps) {
  EXPECT_EQ(EvenNSteps(4), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(EvenNSteps(6), (std::vector<int>{1, 4, 3, 2, 5}));
  EXPECT_THROW(EvenNSteps(5), std::invalid_argument);
}

TEST(EvenNCodeTest, N4) {
  const CodeBook code = EvenNCode(4);
  const std::vector<Permutation> expected = {
      Permutation::FromOneLine({1, 2, 4, 3}), Permutation::FromOneLine({2, 3, 1, 4}),
      Permutation::FromOneLine({3, 4, 2, 1}), Permutation::FromOneLine({4, 1, 3, 2})};
  EXPECT_EQ(code.words(), expected);
  EXPECT_EQ(BruteMinDistance(code.words()), 3);
}

TEST(EvenNCodeTest, OptimalForEvenN) {
  for (int n = 2; n <= 40; n += 2) {
    const CodeBook code = EvenNCode(n);
    EXPECT_EQ(code.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(PartitionsOrderedPairs(code)) << n;
    if (n >= 2 && n <= 12) EXPECT_EQ(BruteMinDistance(code.words()), n - 1);
  }
}

TEST(Zn1CodeTest, N4) {
  const CodeBook code = Zn1Code(4);
  const std::vector<Permutation> expected = {
      Permutation::FromOneLine({1, 2, 3, 4}), Permutation::FromOneLine({2, 4, 1, 3}),
      Permutation::FromOneLine({3, 1, 4, 2}), Permutation::FromOneLine({4, 3, 2, 1})};
  EXPECT_EQ(code.words(), expected);
  EXPECT_EQ(BruteMinDistance(code.words()), 3);
}

TEST(Zn1CodeTest, PrimeSuccessors) {
  for (int n : {2, 4, 6, 10, 12, 16, 18, 22}) {
    const CodeBook code = Zn1Code(n);
    EXPECT_EQ(code.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(PartitionsOrderedPairs(code)) << n;
  }
  EXPECT_THROW(Zn1Code(5), std::invalid_argument);
  EXPECT_THROW(Zn1Code(7), std::invalid_argument);
}

TEST(HamDecompCodeTest, OddN) {
  for (int n : {7, 9}) {
    const auto code = HamDecompCode(n);
    ASSERT_TRUE(code.has_value()) << n;
    EXPECT_EQ(code->size(), static_cast<std::size_t>(n));
    EXPECT_EQ(BruteMinDistance(code->words()), n - 1);
    EXPECT_EQ(code->provenance(), kProvenanceHamDecomp);
  }
  EXPECT_FALSE(HamDecompCode(3).has_value());
  EXPECT_FALSE(HamDecompCode(5).has_value());
  EXPECT_THROW(HamDecompCode(4), std::invalid_argument);
  EXPECT_THROW(HamDecompCode(11), GuardExceeded);
}

// Size n is the most any code with d = n - 1 can have; exhaustive for n <= 5.
TEST(HamDecompCodeTest, SmallOddNHaveNoSizeNCode) {
  for (int n : {3, 5}) {
    const auto all = AllPermutations(n);
    std::vector<std::vector<int>> adj(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i != j && BlockDistance(all[i], all[j]) >= n - 1) adj[i].push_back(static_cast<int>(j));
      }
    }
    // Largest clique containing vertex 0 (all cliques are equivalent under
    // left translation, which preserves the distance).
    std::size_t best = 0;
    std::vector<int> clique = {0};
    std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& cand) {
      best = std::max(best, clique.size());
      for (std::size_t a = 0; a < cand.size(); ++a) {
        std::vector<int> next;
        for (std::size_t b = a + 1; b < cand.size(); ++b) {
          const auto& nb = adj[static_cast<std::size_t>(cand[a])];
          if (std::find(nb.begin(), nb.end(), cand[b]) != nb.end()) next.push_back(cand[b]);
        }
        clique.push_back(cand[a]);
        grow(next);
        clique.pop_back();
      }
    };
    grow(adj[0]);
    EXPECT_EQ(best, static_cast<std::size_t>(n - 1)) << n;
  }
}

}  // namespace
}  // namespace blockperm
