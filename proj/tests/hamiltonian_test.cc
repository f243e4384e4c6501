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

#include "blockperm/hamiltonian.h"

#include <gtest/gtest.h>

#include <set>

namespace blockperm {
namespace {

using Status = HamiltonianSearchResult::Status;

// Checks the cycles form a decomposition of the complete digraph on
// {inf, 1..labels} into directed Hamiltonian cycles.
void ExpectDecomposition(int labels, const HamiltonianSearchResult& r) {
  ASSERT_EQ(r.status, Status::kFound);
  ASSERT_EQ(r.cycles.size(), static_cast<std::size_t>(labels));
  std::set<std::pair<int, int>> arcs;
  for (const auto& c : r.cycles) {
    ASSERT_EQ(c.size(), static_cast<std::size_t>(labels + 1));
    EXPECT_EQ(c.front(), kInfinityVertex);
    EXPECT_EQ(std::set<int>(c.begin(), c.end()).size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      const int to = c[(i + 1) % c.size()];
      EXPECT_GE(to, 0);
      EXPECT_LE(to, labels);
      EXPECT_TRUE(arcs.emplace(from, to).second) << from << "->" << to;
    }
  }
  EXPECT_EQ(arcs.size(), static_cast<std::size_t>((labels + 1) * labels));
}

TEST(HamiltonianTest, Found) {
  for (int labels : {1, 2, 4, 6, 7, 9}) {
    SCOPED_TRACE(labels);
    ExpectDecomposition(labels, FindHamiltonianDecomposition(labels));
  }
}

TEST(HamiltonianTest, FirstCycleFixed) {
  const auto r = FindHamiltonianDecomposition(6);
  ASSERT_EQ(r.status, Status::kFound);
  EXPECT_EQ(r.cycles[0], (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
}

// The complete digraphs on 4 and 6 vertices have no such decomposition.
TEST(HamiltonianTest, NotFound) {
  EXPECT_EQ(FindHamiltonianDecomposition(3).status, Status::kNotFound);
  EXPECT_EQ(FindHamiltonianDecomposition(5).status, Status::kNotFound);
}

TEST(HamiltonianTest, Budget) {
  const auto r = FindHamiltonianDecomposition(5, 3);
  EXPECT_EQ(r.status, Status::kBudgetExhausted);
  EXPECT_TRUE(r.cycles.empty());
}

}  // namespace
}  // namespace blockperm
