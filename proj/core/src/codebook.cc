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

#include "blockperm/codebook.h"

#include <algorithm>

namespace blockperm {

CodeBook::CodeBook(int n, int design_distance, std::string provenance,
                   std::vector<Permutation> words)
    : n_(n),
      design_distance_(design_distance),
      provenance_(std::move(provenance)),
      words_(std::move(words)) {
  if (n < 1) throw std::invalid_argument("code length must be >= 1");
  for (const auto& w : words_) {
    if (w.size() != n) {
      throw std::invalid_argument("codeword of size " + std::to_string(w.size()) +
                                  " in a code of length " + std::to_string(n));
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("duplicate codeword");
  }
}

int MinDistance(const CodeBook& code, std::int64_t max_words) {
  const auto& words = code.words();
  if (static_cast<std::int64_t>(words.size()) > max_words) {
    throw GuardExceeded("pairwise verification of " + std::to_string(words.size()) +
                        " words exceeds guard " + std::to_string(max_words));
  }
  if (words.size() <= 1) return code.n();
  std::vector<std::vector<int>> succ;
  succ.reserve(words.size());
  for (const auto& w : words) succ.push_back(SuccessorTable(w));
  int best = code.n();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, BlockDistanceTo(words[i].image(), succ[j]));
    }
  }
  return best;
}

int VerifyMinDistance(CodeBook& code, std::int64_t max_words) {
  const int d = MinDistance(code, max_words);
  code.set_verified_min_distance(d);
  return d;
}

}  // namespace blockperm
