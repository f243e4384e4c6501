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

#ifndef BLOCKPERM_HAMILTONIAN_H_
#define BLOCKPERM_HAMILTONIAN_H_

#include <cstdint>
#include <vector>

namespace blockperm {

// Vertex 0 of the complete digraph stands for the extra vertex "infinity";
// vertices 1..labels are the permutation labels.
inline constexpr int kInfinityVertex = 0;

struct HamiltonianSearchResult {
  enum class Status { kFound, kNotFound, kBudgetExhausted };

  Status status = Status::kNotFound;
  // On kFound: `labels` directed Hamiltonian cycles, each listed from
  // infinity, i.e. cycles[c] = (0, v_1, ..., v_labels) with the closing arc
  // v_labels -> 0 implied.
  std::vector<std::vector<int>> cycles;
  std::uint64_t nodes = 0;
};

// Backtracking search for a partition of the arcs of the complete digraph on
// {infinity, 1, ..., labels} into `labels` directed Hamiltonian cycles.
//
// Symmetry fixing: relabelling [labels] maps any Hamiltonian cycle onto
// (inf, 1, 2, ..., labels), so the first cycle is fixed to it; the remaining
// cycles are ordered by the vertex they visit right after infinity. Both are
// lossless, so kNotFound means no decomposition exists.
//
// node_budget = 0 means unbounded; otherwise the search stops with
// kBudgetExhausted after that many extension steps.
HamiltonianSearchResult FindHamiltonianDecomposition(int labels,
                                                     std::uint64_t node_budget = 0);

}  // namespace blockperm

#endif  // BLOCKPERM_HAMILTONIAN_H_
