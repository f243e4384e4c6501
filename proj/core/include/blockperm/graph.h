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

#ifndef BLOCKPERM_GRAPH_H_
#define BLOCKPERM_GRAPH_H_

#include <cstdint>
#include <vector>

#include "blockperm/codebook.h"
#include "blockperm/common.h"
#include "blockperm/permutation.h"

namespace blockperm {

// Vertices are permutations; {u, v} is an edge iff 0 < d_B(u, v) < d. An
// independent set is exactly an (n, d) code.
struct BlockGraph {
  int n = 0;
  int d = 0;
  std::vector<Permutation> vertices;
  std::vector<std::vector<int>> adjacency;  // sorted neighbour indices

  std::size_t VertexCount() const { return vertices.size(); }
  std::uint64_t EdgeCount() const;
};

struct GraphOptions {
  int max_n = Guards{}.max_graph_n;
  int threads = 0;
};

// Full graph on S_n, vertices in lexicographic order. Throws GuardExceeded
// when n > options.max_n and std::invalid_argument for d < 1.
BlockGraph BuildGraph(int n, int d, const GraphOptions& options = {});

// Induced graph on the given permutations (all of size n), in the given order.
BlockGraph BuildGraphOn(int d, std::vector<Permutation> vertices,
                        const GraphOptions& options = {});

// Number of identity adjacencies (i, i+1) missing from both p1 and p2.
int XValue(const Permutation& p1, const Permutation& p2);

// Statistics of the neighbourhood of the identity, which by left-invariance
// is isomorphic to every vertex's neighbourhood.
struct NeighborhoodStats {
  int n = 0;
  int d = 0;
  std::uint64_t delta = 0;              // degree of every vertex
  std::uint64_t p_edges = 0;            // edges inside the neighbourhood
  std::uint64_t triangle_count = 0;     // triangles inside the neighbourhood
  std::uint64_t zero_x_edge_count = 0;  // edges within R(n, d-1) with x = 0
  std::vector<std::uint64_t> layer_sizes;  // |R(n, k)| for k = 1..d-1

  friend bool operator==(const NeighborhoodStats&, const NeighborhoodStats&) = default;
};

NeighborhoodStats ComputeNeighborhoodStats(int n, int d,
                                           const GraphOptions& options = {});

// Right-hand side of the locally-sparse independence bound
//   |V| / (10 D) * (log2 D - 0.5 * log2(P / 3))
// with |V| = n!, D = stats.delta and P = stats.p_edges. Throws
// std::domain_error when D < 2 or P < 1.
double JvLowerFormula(const NeighborhoodStats& stats);
double JvLowerFormula(double vertices, double delta, double p_edges);

enum class GreedyOrder { kLexicographic, kDegree };

// Maximal independent set, scanning vertices in index order or by increasing
// degree (ties by index). The returned code has its minimum distance
// verified.
CodeBook GreedyIndependentSet(const BlockGraph& g,
                              GreedyOrder order = GreedyOrder::kLexicographic);

// Maximum independent set by bitset branch and bound (maximum clique in the
// complement, greedy colouring bound). Throws GuardExceeded when the graph
// has more than max_vertices vertices.
CodeBook ExactIndependentSet(const BlockGraph& g,
                             int max_vertices = Guards{}.max_independent_set_vertices);

}  // namespace blockperm

#endif  // BLOCKPERM_GRAPH_H_
