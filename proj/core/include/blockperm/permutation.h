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

#ifndef BLOCKPERM_PERMUTATION_H_
#define BLOCKPERM_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "blockperm/common.h"

namespace blockperm {

// A permutation of [n] = {1, ..., n} in one-line notation: image()[i] is the
// label at position i + 1. Immutable once constructed.
class Permutation {
 public:
  // Validates that `values` is a rearrangement of 1..n with n >= 1.
  // Throws std::invalid_argument on empty input, duplicates or labels
  // outside [1, n].
  static Permutation FromOneLine(std::span<const int> values);
  static Permutation FromOneLine(std::initializer_list<int> values) {
    return FromOneLine(std::span<const int>(values.begin(), values.size()));
  }
  static Permutation Identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  // Label at 0-based position `pos`.
  int operator[](std::size_t pos) const { return image_[pos]; }
  // pi(i) for 1-based i.
  int Apply(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> image() const { return image_; }

  bool IsIdentity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  std::vector<int> image_;
};

// An ordered pair (first, second) of distinct labels.
struct AdjacencyPair {
  int first = 0;
  int second = 0;

  friend bool operator==(const AdjacencyPair&, const AdjacencyPair&) = default;
  friend auto operator<=>(const AdjacencyPair&, const AdjacencyPair&) = default;
};

// The set of consecutive pairs of a permutation, kept sorted
// lexicographically.
struct CharSet {
  int n = 0;
  std::vector<AdjacencyPair> pairs;

  bool Contains(AdjacencyPair p) const;
  friend bool operator==(const CharSet&, const CharSet&) = default;
};

// result(i) = outer(inner(i)). Throws std::invalid_argument on size mismatch.
Permutation Compose(const Permutation& outer, const Permutation& inner);
Permutation Inverse(const Permutation& p);

CharSet CharacteristicSet(const Permutation& p);

// Validates the structural invariants of a CharSet: distinct labels per pair,
// labels in range, each label at most once as first and as second
// coordinate, and no directed cycle.
bool IsPathUnion(const CharSet& c);

// |A(p1) \ A(p2)|: the number of adjacencies of p1 broken in p2.
// Throws std::invalid_argument on size mismatch.
int BlockDistance(const Permutation& p1, const Permutation& p2);

// Distance to the identity without materialising it: the number of positions
// with p(i+1) != p(i) + 1.
int DistanceToIdentity(std::span<const int> image);

// True iff no two neighbours satisfy p(i+1) = p(i) + 1.
bool IsMinimal(const Permutation& p);
bool IsMinimal(std::span<const int> image);

// Result of the segmentation search: p1 cut into `blocks` and reordered by
// `order` (a minimal permutation of the blocks) yields p2.
struct SegmentationWitness {
  int distance = 0;
  std::vector<std::vector<int>> blocks;
  Permutation order = Permutation::Identity(1);
};

// Brute-force block distance: searches cut sets of p1 in increasing size and
// all minimal block orders. Exponential; throws GuardExceeded when
// n > max_n.
SegmentationWitness DistanceByDefinitionWitness(const Permutation& p1,
                                                const Permutation& p2,
                                                int max_n = Guards{}.max_definition_n);
int DistanceByDefinition(const Permutation& p1, const Permutation& p2,
                         int max_n = Guards{}.max_definition_n);

// All n rotations of p, starting with p itself.
std::vector<Permutation> CyclicShifts(const Permutation& p);

// Successor table: succ[a] = label following a in p, or 0 if a is last.
// Indexed by label (entry 0 unused). Used by the hot loops that compare one
// permutation against many.
std::vector<int> SuccessorTable(const Permutation& p);
// |A(p) \ A(q)| given q's successor table.
int BlockDistanceTo(std::span<const int> p_image, std::span<const int> q_succ);

}  // namespace blockperm

template <>
struct std::hash<blockperm::Permutation> {
  std::size_t operator()(const blockperm::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.image()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

#endif  // BLOCKPERM_PERMUTATION_H_
