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

#ifndef BLOCKPERM_CODEBOOK_H_
#define BLOCKPERM_CODEBOOK_H_

#include <optional>
#include <string>
#include <vector>

#include "blockperm/common.h"
#include "blockperm/permutation.h"

namespace blockperm {

// A permutation code: distinct words of a common length n, the design
// distance it was built for, and where it came from.
class CodeBook {
 public:
  // Throws std::invalid_argument on duplicate words, words of the wrong size
  // or n < 1. Words are kept in lexicographic order.
  CodeBook(int n, int design_distance, std::string provenance,
           std::vector<Permutation> words);

  int n() const { return n_; }
  int design_distance() const { return design_distance_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<Permutation>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  std::optional<int> verified_min_distance() const { return verified_; }

  // Used by deserialisation; does not recompute anything.
  void set_verified_min_distance(std::optional<int> v) { verified_ = v; }

  friend bool operator==(const CodeBook&, const CodeBook&) = default;

 private:
  int n_;
  int design_distance_;
  std::string provenance_;
  std::vector<Permutation> words_;
  std::optional<int> verified_;
};

// Exact minimum pairwise block distance, n for codes with at most one word.
// Records the value in the code. Throws GuardExceeded when the code has more
// than max_words words.
int VerifyMinDistance(CodeBook& code, std::int64_t max_words = Guards{}.max_words);
int MinDistance(const CodeBook& code, std::int64_t max_words = Guards{}.max_words);

}  // namespace blockperm

#endif  // BLOCKPERM_CODEBOOK_H_
