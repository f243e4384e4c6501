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

#include "blockperm/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <limits>
#include <thread>

#include "blockperm/parallel_scan.h"

namespace blockperm {
namespace {

constexpr char kProvenanceGreedy[] = "greedy";
constexpr char kProvenanceExact[] = "exact-mis";

void CheckDesign(int d) {
  if (d < 1) throw std::invalid_argument("graph design distance must be >= 1");
}

// Fixed-width bitset over vertex indices.
class VertexSet {
 public:
  explicit VertexSet(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void Reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool Test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  bool Empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::size_t Count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  // Lowest set index; requires !Empty().
  std::size_t First() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return words_.size() * 64;
  }
  void IntersectWith(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  }
  void Subtract(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }
  std::size_t IntersectionCount(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bitset branch and bound for a maximum clique of the complement graph:
// candidates are greedily partitioned into cliques of g (colour classes of
// the complement); the number of classes bounds how many more vertices can be
// added.
class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const BlockGraph& g) : size_(g.VertexCount()) {
    // Branch on vertices with the most non-neighbours first.
    order_.resize(size_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.adjacency[a].size() < g.adjacency[b].size();
    });
    std::vector<std::size_t> position(size_);
    for (std::size_t i = 0; i < size_; ++i) position[order_[i]] = i;
    compatible_.assign(size_, VertexSet(size_));
    for (std::size_t i = 0; i < size_; ++i) {
      VertexSet& row = compatible_[i];
      for (std::size_t j = 0; j < size_; ++j) {
        if (j != i) row.Set(j);
      }
      for (int nb : g.adjacency[order_[i]]) row.Reset(position[static_cast<std::size_t>(nb)]);
    }
  }

  std::vector<std::size_t> Solve() {
    VertexSet all(size_);
    for (std::size_t i = 0; i < size_; ++i) all.Set(i);
    std::vector<std::size_t> current;
    Expand(current, all);
    std::vector<std::size_t> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void Expand(std::vector<std::size_t>& current, VertexSet candidates) {
    // Colour the candidates; vertices[k] has bound colours[k].
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colours;
    VertexSet uncoloured = candidates;
    std::size_t colour = 0;
    while (!uncoloured.Empty()) {
      ++colour;
      VertexSet open = uncoloured;
      while (!open.Empty()) {
        const std::size_t v = open.First();
        open.Reset(v);
        uncoloured.Reset(v);
        open.Subtract(compatible_[v]);
        vertices.push_back(v);
        colours.push_back(colour);
      }
    }
    for (std::size_t k = vertices.size(); k-- > 0;) {
      if (current.size() + colours[k] <= best_.size()) return;
      const std::size_t v = vertices[k];
      current.push_back(v);
      VertexSet next = candidates;
      next.IntersectWith(compatible_[v]);
      if (next.Empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        Expand(current, next);
      }
      current.pop_back();
      candidates.Reset(v);
    }
  }

  std::size_t size_;
  std::vector<std::size_t> order_;
  std::vector<VertexSet> compatible_;
  std::vector<std::size_t> best_;
};

CodeBook ToCode(const BlockGraph& g, const std::vector<std::size_t>& chosen,
                const char* provenance) {
  std::vector<Permutation> words;
  words.reserve(chosen.size());
  for (auto i : chosen) words.push_back(g.vertices[i]);
  CodeBook code(g.n, g.d, provenance, std::move(words));
  VerifyMinDistance(code, std::numeric_limits<std::int64_t>::max());
  return code;
}

}  // namespace

std::uint64_t BlockGraph::EdgeCount() const {
  std::uint64_t twice = 0;
  for (const auto& row : adjacency) twice += row.size();
  return twice / 2;
}

BlockGraph BuildGraphOn(int d, std::vector<Permutation> vertices,
                        const GraphOptions& options) {
  CheckDesign(d);
  BlockGraph g;
  g.d = d;
  g.n = vertices.empty() ? 0 : vertices.front().size();
  for (const auto& v : vertices) {
    if (v.size() != g.n) throw std::invalid_argument("graph vertices differ in size");
  }
  g.vertices = std::move(vertices);
  const std::size_t count = g.vertices.size();
  std::vector<std::vector<int>> succ;
  succ.reserve(count);
  for (const auto& v : g.vertices) succ.push_back(SuccessorTable(v));
  g.adjacency.assign(count, {});

  const auto workers = static_cast<std::size_t>(
      std::max(1, std::min<int>(ResolveThreadCount(options.threads),
                                static_cast<int>(std::max<std::size_t>(count, 1)))));
  auto fill_rows = [&](std::size_t w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      auto& row = g.adjacency[i];
      for (std::size_t j = 0; j < count; ++j) {
        if (j == i) continue;
        const int dist = BlockDistanceTo(g.vertices[i].image(), succ[j]);
        if (dist > 0 && dist < d) row.push_back(static_cast<int>(j));
      }
    }
  };
  if (workers == 1) {
    fill_rows(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w);
  }
  return g;
}

BlockGraph BuildGraph(int n, int d, const GraphOptions& options) {
  CheckDesign(d);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > options.max_n) {
    throw GuardExceeded("block graph: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(options.max_n));
  }
  std::vector<Permutation> vertices;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    vertices.push_back(Permutation::FromOneLine(image));
  } while (std::next_permutation(image.begin(), image.end()));
  BlockGraph g = BuildGraphOn(d, std::move(vertices), options);
  g.n = n;
  return g;
}

int XValue(const Permutation& p1, const Permutation& p2) {
  if (p1.size() != p2.size()) {
    throw std::invalid_argument("x value: permutations differ in size");
  }
  const auto s1 = SuccessorTable(p1);
  const auto s2 = SuccessorTable(p2);
  int x = 0;
  for (int i = 1; i < p1.size(); ++i) {
    if (s1[static_cast<std::size_t>(i)] != i + 1 && s2[static_cast<std::size_t>(i)] != i + 1) ++x;
  }
  return x;
}

NeighborhoodStats ComputeNeighborhoodStats(int n, int d, const GraphOptions& options) {
  CheckDesign(d);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > options.max_n) {
    throw GuardExceeded("neighbourhood statistics: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(options.max_n));
  }
  using Hits = std::vector<std::vector<int>>;
  auto parts = ScanSymmetricGroup<Hits>(
      n, ResolveThreadCount(options.threads), [d](Hits& h, std::span<const int> image) {
        const int k = DistanceToIdentity(image);
        if (k > 0 && k < d) h.emplace_back(image.begin(), image.end());
      });
  std::vector<Permutation> nbrs;
  for (const auto& part : parts) {
    for (const auto& img : part) nbrs.push_back(Permutation::FromOneLine(img));
  }

  NeighborhoodStats stats;
  stats.n = n;
  stats.d = d;
  stats.delta = nbrs.size();
  stats.layer_sizes.assign(static_cast<std::size_t>(std::max(d - 1, 0)), 0);
  std::vector<int> layer(nbrs.size());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    layer[i] = DistanceToIdentity(nbrs[i].image());
    ++stats.layer_sizes[static_cast<std::size_t>(layer[i] - 1)];
  }

  const BlockGraph h = BuildGraphOn(d, nbrs, options);
  stats.p_edges = h.EdgeCount();
  std::vector<VertexSet> rows(h.VertexCount(), VertexSet(h.VertexCount()));
  for (std::size_t i = 0; i < h.VertexCount(); ++i) {
    for (int j : h.adjacency[i]) rows[i].Set(static_cast<std::size_t>(j));
  }
  std::uint64_t triangles = 0;
  for (std::size_t i = 0; i < h.VertexCount(); ++i) {
    for (int j : h.adjacency[i]) {
      if (static_cast<std::size_t>(j) <= i) continue;
      triangles += rows[i].IntersectionCount(rows[static_cast<std::size_t>(j)]);
    }
  }
  stats.triangle_count = triangles / 3;

  for (std::size_t i = 0; i < h.VertexCount(); ++i) {
    if (layer[i] != d - 1) continue;
    for (int j : h.adjacency[i]) {
      const auto ju = static_cast<std::size_t>(j);
      if (ju <= i || layer[ju] != d - 1) continue;
      if (XValue(h.vertices[i], h.vertices[ju]) == 0) ++stats.zero_x_edge_count;
    }
  }
  return stats;
}

double JvLowerFormula(double vertices, double delta, double p_edges) {
  if (delta < 2 || p_edges < 1) {
    throw std::domain_error("locally-sparse bound needs delta >= 2 and P >= 1");
  }
  return vertices / (10.0 * delta) * (std::log2(delta) - 0.5 * std::log2(p_edges / 3.0));
}

double JvLowerFormula(const NeighborhoodStats& stats) {
  double vertices = 1;
  for (int i = 2; i <= stats.n; ++i) vertices *= i;
  return JvLowerFormula(vertices, static_cast<double>(stats.delta),
                        static_cast<double>(stats.p_edges));
}

CodeBook GreedyIndependentSet(const BlockGraph& g, GreedyOrder order) {
  std::vector<std::size_t> scan(g.VertexCount());
  std::iota(scan.begin(), scan.end(), 0);
  if (order == GreedyOrder::kDegree) {
    std::stable_sort(scan.begin(), scan.end(), [&](std::size_t a, std::size_t b) {
      return g.adjacency[a].size() < g.adjacency[b].size();
    });
  }
  std::vector<char> blocked(g.VertexCount(), 0);
  std::vector<std::size_t> chosen;
  for (auto v : scan) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    for (int nb : g.adjacency[v]) blocked[static_cast<std::size_t>(nb)] = 1;
  }
  return ToCode(g, chosen, kProvenanceGreedy);
}

CodeBook ExactIndependentSet(const BlockGraph& g, int max_vertices) {
  if (static_cast<std::int64_t>(g.VertexCount()) > max_vertices) {
    throw GuardExceeded("exact independent set on " + std::to_string(g.VertexCount()) +
                        " vertices exceeds guard " + std::to_string(max_vertices));
  }
  if (g.VertexCount() == 0) return CodeBook(std::max(g.n, 1), g.d, kProvenanceExact, {});
  return ToCode(g, MaxIndependentSet(g).Solve(), kProvenanceExact);
}

}  // namespace blockperm
