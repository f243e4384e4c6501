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

#include <bit>
#include <stdexcept>

namespace blockperm {
namespace {

using Mask = std::uint32_t;

class DecompositionSearch {
 public:
  DecompositionSearch(int labels, std::uint64_t budget)
      : labels_(labels),
        vertices_(labels + 1),
        budget_(budget),
        free_out_(static_cast<std::size_t>(vertices_), 0),
        free_in_(static_cast<std::size_t>(vertices_), 0),
        cycles_(static_cast<std::size_t>(labels)) {
    const Mask all = (Mask{1} << vertices_) - 1;
    for (int v = 0; v < vertices_; ++v) {
      free_out_[static_cast<std::size_t>(v)] = all & ~(Mask{1} << v);
      free_in_[static_cast<std::size_t>(v)] = all & ~(Mask{1} << v);
    }
  }

  HamiltonianSearchResult Run() {
    HamiltonianSearchResult result;
    // Fixed first cycle inf -> 1 -> 2 -> ... -> labels -> inf.
    auto& first = cycles_[0];
    first.push_back(kInfinityVertex);
    for (int v = 1; v <= labels_; ++v) {
      UseArc(v - 1, v);
      first.push_back(v);
    }
    UseArc(labels_, kInfinityVertex);

    const bool found = labels_ == 1 || StartCycle(1);
    result.nodes = nodes_;
    if (found) {
      result.status = HamiltonianSearchResult::Status::kFound;
      result.cycles = cycles_;
    } else if (exhausted_) {
      result.status = HamiltonianSearchResult::Status::kBudgetExhausted;
    } else {
      result.status = HamiltonianSearchResult::Status::kNotFound;
    }
    return result;
  }

 private:
  bool Free(int u, int v) const {
    return (free_out_[static_cast<std::size_t>(u)] >> v) & 1u;
  }
  void UseArc(int u, int v) {
    free_out_[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
    free_in_[static_cast<std::size_t>(v)] &= ~(Mask{1} << u);
  }
  void ReleaseArc(int u, int v) {
    free_out_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    free_in_[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }

  // Cycle c (0-based) leaves infinity towards label c + 1.
  bool StartCycle(int c) {
    if (c == labels_) return true;
    const int start = c + 1;
    auto& path = cycles_[static_cast<std::size_t>(c)];
    path.assign({kInfinityVertex, start});
    UseArc(kInfinityVertex, start);
    const Mask visited = (Mask{1} << kInfinityVertex) | (Mask{1} << start);
    if (Extend(c, start, visited)) return true;
    ReleaseArc(kInfinityVertex, start);
    path.clear();
    return false;
  }

  // Every label not yet on the current path still needs a free arc in from
  // the current vertex or another unvisited label, and a free arc out to an
  // unvisited label or infinity.
  bool Feasible(int current, Mask visited) const {
    const Mask all = (Mask{1} << vertices_) - 1;
    const Mask unvisited = all & ~visited;
    for (Mask rest = unvisited; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const Mask preds = unvisited | (Mask{1} << current);
      if ((free_in_[static_cast<std::size_t>(u)] & preds & ~(Mask{1} << u)) == 0) {
        return false;
      }
      const Mask succs = unvisited | (Mask{1} << kInfinityVertex);
      if ((free_out_[static_cast<std::size_t>(u)] & succs & ~(Mask{1} << u)) == 0) {
        return false;
      }
    }
    return true;
  }

  bool Extend(int c, int current, Mask visited) {
    if (budget_ != 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    const Mask all = (Mask{1} << vertices_) - 1;
    if (visited == all) {
      if (!Free(current, kInfinityVertex)) return false;
      UseArc(current, kInfinityVertex);
      if (StartCycle(c + 1)) return true;
      ReleaseArc(current, kInfinityVertex);
      return false;
    }
    if (!Feasible(current, visited)) return false;
    auto& path = cycles_[static_cast<std::size_t>(c)];
    for (Mask cand = free_out_[static_cast<std::size_t>(current)] & ~visited;
         cand != 0; cand &= cand - 1) {
      const int next = std::countr_zero(cand);
      UseArc(current, next);
      path.push_back(next);
      if (Extend(c, next, visited | (Mask{1} << next))) return true;
      path.pop_back();
      ReleaseArc(current, next);
      if (exhausted_) return false;
    }
    return false;
  }

  int labels_;
  int vertices_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Mask> free_out_;
  std::vector<Mask> free_in_;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace

HamiltonianSearchResult FindHamiltonianDecomposition(int labels,
                                                     std::uint64_t node_budget) {
  if (labels < 1 || labels > 30) {
    throw std::invalid_argument("Hamiltonian decomposition search needs 1 <= labels <= 30");
  }
  return DecompositionSearch(labels, node_budget).Run();
}

}  // namespace blockperm
