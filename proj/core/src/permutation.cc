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

#include "blockperm/permutation.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace blockperm {
namespace {

void RequireSameSize(const Permutation& a, const Permutation& b,
                     const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": permutations of sizes " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
  }
}

// All minimal permutations of [k], 0-based, in lexicographic order.
const std::vector<std::vector<int>>& MinimalOrders(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sigma[static_cast<std::size_t>(i)] = i;
  do {
    bool minimal = true;
    for (int i = 0; i + 1 < k; ++i) {
      if (sigma[static_cast<std::size_t>(i) + 1] ==
          sigma[static_cast<std::size_t>(i)] + 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return cache.emplace(k, std::move(out)).first->second;
}

}  // namespace

Permutation Permutation::FromOneLine(std::span<const int> values) {
  if (values.empty()) {
    throw std::invalid_argument("permutation must have at least one label");
  }
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(values.size() + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("label " + std::to_string(v) +
                                  " out of range [1, " + std::to_string(n) +
                                  "]");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("duplicate label " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation Permutation::Identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(image));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool CharSet::Contains(AdjacencyPair p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

Permutation Compose(const Permutation& outer, const Permutation& inner) {
  RequireSameSize(outer, inner, "compose");
  std::vector<int> out(static_cast<std::size_t>(inner.size()));
  for (int i = 0; i < inner.size(); ++i) {
    out[static_cast<std::size_t>(i)] = outer.Apply(inner[static_cast<std::size_t>(i)]);
  }
  return Permutation::FromOneLine(out);
}

Permutation Inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    out[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - 1)] = i + 1;
  }
  return Permutation::FromOneLine(out);
}

CharSet CharacteristicSet(const Permutation& p) {
  CharSet c;
  c.n = p.size();
  c.pairs.reserve(static_cast<std::size_t>(std::max(0, p.size() - 1)));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(p.size()); ++i) {
    c.pairs.push_back({p[i], p[i + 1]});
  }
  std::sort(c.pairs.begin(), c.pairs.end());
  return c;
}

bool IsPathUnion(const CharSet& c) {
  const auto n = static_cast<std::size_t>(c.n);
  std::vector<int> succ(n + 1, 0);
  std::vector<char> has_pred(n + 1, 0);
  for (const auto& [a, b] : c.pairs) {
    if (a < 1 || b < 1 || a > c.n || b > c.n || a == b) return false;
    if (succ[static_cast<std::size_t>(a)] != 0) return false;
    if (has_pred[static_cast<std::size_t>(b)]) return false;
    succ[static_cast<std::size_t>(a)] = b;
    has_pred[static_cast<std::size_t>(b)] = 1;
  }
  // Every component must be entered from a source; unreached labels lie on
  // a cycle.
  std::vector<char> reached(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) {
    if (has_pred[v]) continue;
    for (std::size_t u = v; u != 0; u = static_cast<std::size_t>(succ[u])) {
      reached[u] = 1;
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (!reached[v]) return false;
  }
  return true;
}

std::vector<int> SuccessorTable(const Permutation& p) {
  std::vector<int> succ(static_cast<std::size_t>(p.size()) + 1, 0);
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(p.size()); ++i) {
    succ[static_cast<std::size_t>(p[i])] = p[i + 1];
  }
  return succ;
}

int BlockDistanceTo(std::span<const int> p_image, std::span<const int> q_succ) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < p_image.size(); ++i) {
    if (q_succ[static_cast<std::size_t>(p_image[i])] != p_image[i + 1]) ++d;
  }
  return d;
}

int BlockDistance(const Permutation& p1, const Permutation& p2) {
  RequireSameSize(p1, p2, "block distance");
  return BlockDistanceTo(p1.image(), SuccessorTable(p2));
}

int DistanceToIdentity(std::span<const int> image) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < image.size(); ++i) {
    if (image[i + 1] != image[i] + 1) ++d;
  }
  return d;
}

bool IsMinimal(std::span<const int> image) {
  for (std::size_t i = 0; i + 1 < image.size(); ++i) {
    if (image[i + 1] == image[i] + 1) return false;
  }
  return true;
}

bool IsMinimal(const Permutation& p) { return IsMinimal(p.image()); }

SegmentationWitness DistanceByDefinitionWitness(const Permutation& p1,
                                                const Permutation& p2,
                                                int max_n) {
  RequireSameSize(p1, p2, "distance by definition");
  const int n = p1.size();
  if (n > max_n) {
    throw GuardExceeded("distance by definition: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(max_n));
  }
  const auto a = p1.image();
  const auto b = p2.image();
  // d cut points chosen among the n - 1 gaps, in increasing d.
  for (int d = 0; d <= n - 1; ++d) {
    const auto& orders = MinimalOrders(d + 1);
    std::vector<char> chosen(static_cast<std::size_t>(n - 1), 0);
    std::fill(chosen.end() - d, chosen.end(), 1);
    do {
      // Block k spans [starts[k], starts[k + 1]).
      std::vector<int> starts{0};
      for (int g = 0; g < n - 1; ++g) {
        if (chosen[static_cast<std::size_t>(g)]) starts.push_back(g + 1);
      }
      starts.push_back(n);
      for (const auto& sigma : orders) {
        std::size_t pos = 0;
        bool ok = true;
        for (std::size_t k = 0; k < sigma.size() && ok; ++k) {
          const auto blk = static_cast<std::size_t>(sigma[k]);
          for (int i = starts[blk]; i < starts[blk + 1]; ++i, ++pos) {
            if (a[static_cast<std::size_t>(i)] != b[pos]) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        SegmentationWitness w;
        w.distance = d;
        for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
          w.blocks.emplace_back(a.begin() + starts[k], a.begin() + starts[k + 1]);
        }
        std::vector<int> order1(sigma.size());
        for (std::size_t k = 0; k < sigma.size(); ++k) order1[k] = sigma[k] + 1;
        w.order = Permutation::FromOneLine(order1);
        return w;
      }
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  // Unreachable: cutting p1 exactly at the adjacencies missing from p2 always
  // yields blocks whose order in p2 is minimal.
  throw std::logic_error("distance by definition: no segmentation found");
}

int DistanceByDefinition(const Permutation& p1, const Permutation& p2,
                         int max_n) {
  return DistanceByDefinitionWitness(p1, p2, max_n).distance;
}

std::vector<Permutation> CyclicShifts(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  std::vector<int> rot(p.image().begin(), p.image().end());
  for (int t = 0; t < p.size(); ++t) {
    out.push_back(Permutation::FromOneLine(rot));
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return out;
}

}  // namespace blockperm
