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

#include "blockperm/prime_field.h"

#include <gtest/gtest.h>

#include <random>
#include <map>
#include <set>

#include "oracles.h"

namespace blockperm {
namespace {

TEST(PrimeFieldTest, SelectPrime) {
  EXPECT_EQ(SelectPrime(2).modulus(), 2u);
  EXPECT_EQ(SelectPrime(4).modulus(), 7u);
  EXPECT_EQ(SelectPrime(5).modulus(), 11u);
  EXPECT_EQ(SelectPrime(6).modulus(), 17u);
  EXPECT_EQ(SelectPrime(7).modulus(), 23u);
  EXPECT_THROW(SelectPrime(1), std::invalid_argument);
}

TEST(PrimeFieldTest, SelectedPrimeWithinBertrandRange) {
  for (int n = 2; n <= 200; ++n) {
    const std::uint64_t q = SelectPrime(n).modulus();
    const std::uint64_t half = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    EXPECT_GE(q, half);
    EXPECT_LE(q, static_cast<std::uint64_t>(n) * (n - 1));
    for (std::uint64_t c = half; c < q; ++c) EXPECT_FALSE(IsPrime(c));
  }
}

TEST(PrimeFieldTest, RejectsComposite) {
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
}

TEST(PairEncoderTest, LexicographicRanks) {
  const PairEncoder enc(4, SelectPrime(4));
  EXPECT_EQ(enc.Encode(1, 2), 0u);
  EXPECT_EQ(enc.Encode(1, 3), 1u);
  EXPECT_EQ(enc.Encode(1, 4), 2u);
  EXPECT_EQ(enc.Encode(2, 3), 3u);
  EXPECT_EQ(enc.Encode(2, 4), 4u);
  EXPECT_EQ(enc.Encode(3, 4), 5u);
  EXPECT_EQ(enc.Encode(2, 1), enc.Encode(1, 2));
}

TEST(PairEncoderTest, InjectiveOnUnorderedPairs) {
  for (int n = 2; n <= 12; ++n) {
    const PairEncoder enc(n, SelectPrime(n));
    std::set<FieldElement> seen;
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        EXPECT_TRUE(seen.insert(enc.Encode(x, y)).second);
        EXPECT_EQ(enc.Encode(x, y), enc.Encode(y, x));
        EXPECT_LT(enc.Encode(x, y), enc.field().modulus());
      }
    }
  }
  const PairEncoder three(3, PrimeField(3));
  EXPECT_EQ(std::set<FieldElement>({three.Encode(1, 2), three.Encode(1, 3), three.Encode(2, 3)}),
            (std::set<FieldElement>{0, 1, 2}));
}

TEST(PairEncoderTest, FieldTooSmall) {
  EXPECT_THROW(PairEncoder(5, PrimeField(7)), std::invalid_argument);
}

TEST(SyndromeTest, Examples) {
  const PairEncoder enc(4, PrimeField(7));
  const Syndrome a = ComputeSyndrome(Permutation::Identity(4), 3, enc);
  EXPECT_EQ(a.values, (std::vector<FieldElement>{1, 1}));
  const Syndrome b = ComputeSyndrome(Permutation::FromOneLine({4, 3, 2, 1}), 3, enc);
  EXPECT_EQ(b, a);
  EXPECT_EQ(BlockDistance(Permutation::Identity(4), Permutation::FromOneLine({4, 3, 2, 1})), 3);
}

TEST(SyndromeTest, DistanceTwoIsSum) {
  const PairEncoder enc(5, SelectPrime(5));
  const auto p = Permutation::FromOneLine({3, 5, 1, 2, 4});
  const FieldElement sum =
      (enc.Encode(3, 5) + enc.Encode(5, 1) + enc.Encode(1, 2) + enc.Encode(2, 4)) % 11;
  EXPECT_EQ(ComputeSyndrome(p, 2, enc).values, std::vector<FieldElement>{sum});
}

TEST(SyndromeTest, Errors) {
  const PairEncoder enc(4, PrimeField(7));
  EXPECT_THROW(ComputeSyndrome(Permutation::Identity(4), 1, enc), std::invalid_argument);
  EXPECT_THROW(ComputeSyndrome(Permutation::Identity(5), 3, enc), std::invalid_argument);
}

TEST(SyndromeTest, ExtraCoordinatesAreZero) {
  const PairEncoder enc(3, SelectPrime(3));
  const Syndrome s = ComputeSyndrome(Permutation::FromOneLine({2, 3, 1}), 6, enc);
  ASSERT_EQ(s.values.size(), 5u);
  EXPECT_EQ(s.values[2], 0u);
  EXPECT_EQ(s.values[3], 0u);
  EXPECT_EQ(s.values[4], 0u);
}

// The product DP agrees with explicit subset sums.
TEST(SyndromeTest, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const int d = 2 + static_cast<int>(rng() % 5);
    const PairEncoder enc(n, SelectPrime(n));
    const auto p = testing::RandomPermutation(n, rng);
    std::vector<std::uint64_t> gammas;
    for (int i = 0; i + 1 < n; ++i) {
      gammas.push_back(enc.Encode(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]));
    }
    const auto expected = testing::ElementarySymmetricBySubsets(gammas, d - 1, enc.field().modulus());
    const auto got = ComputeSyndrome(p, d, enc).values;
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) ASSERT_EQ(got[k], expected[k]);
  }
}

// Equal syndromes force distance >= d for d <= n - 1. Pairs are unordered, so
// a permutation and its reversal always collide; their distance is n - 1.
TEST(SyndromeTest, EqualSyndromesAreFarApart) {
  for (int n = 4; n <= 6; ++n) {
    const PairEncoder enc(n, SelectPrime(n));
    const auto all = testing::AllPermutations(n);
    for (int d = 2; d <= n - 1; ++d) {
      std::vector<Syndrome> syn;
      for (const auto& p : all) syn.push_back(ComputeSyndrome(p, d, enc));
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          if (syn[i] == syn[j]) ASSERT_GE(BlockDistance(all[i], all[j]), d);
        }
      }
    }
  }
}

TEST(SyndromeTest, EqualSyndromesAreFarApartSampledN7) {
  const PairEncoder enc(7, SelectPrime(7));
  std::map<Syndrome, std::vector<Permutation>> classes;
  for (const auto& p : testing::AllPermutations(7)) classes[ComputeSyndrome(p, 4, enc)].push_back(p);
  std::vector<const std::vector<Permutation>*> multi;
  for (const auto& [s, m] : classes) {
    if (m.size() > 1) multi.push_back(&m);
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100000; ++i) {
    const auto& m = *multi[rng() % multi.size()];
    const std::size_t a = rng() % m.size();
    std::size_t b = rng() % (m.size() - 1);
    if (b >= a) ++b;
    ASSERT_GE(BlockDistance(m[a], m[b]), 4);
  }
}

}  // namespace
}  // namespace blockperm
