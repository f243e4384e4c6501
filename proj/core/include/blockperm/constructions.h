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

#ifndef BLOCKPERM_CONSTRUCTIONS_H_
#define BLOCKPERM_CONSTRUCTIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "blockperm/codebook.h"
#include "blockperm/common.h"
#include "blockperm/prime_field.h"

namespace blockperm {

// Provenance tags written into generated codes.
inline constexpr char kProvenanceSyndrome[] = "syndrome";
inline constexpr char kProvenanceCyclic[] = "cyclic";
inline constexpr char kProvenanceEven[] = "even";
inline constexpr char kProvenanceZn1[] = "zn1";
inline constexpr char kProvenanceHamDecomp[] = "hamdecomp";

struct ScanOptions {
  int max_n = Guards{}.max_enumeration_n;
  int threads = 0;
};

// Syndrome classes
// ----------------
// Every permutation of S_n lands in exactly one class {pi : F(pi) = f}; any
// two distinct members of a class are at block distance >= d. The encoder is
// built over SelectPrime(n).

// Exhaustive scan for one class. Throws GuardExceeded when n > max_n.
CodeBook SyndromeClass(int n, int d, const Syndrome& f,
                       const ScanOptions& options = {});

// Membership test usable at any n.
bool InSyndromeClass(const Permutation& p, const Syndrome& f,
                     const PairEncoder& enc);

// Class sizes of the full partition of S_n, keyed by syndrome.
std::map<Syndrome, std::uint64_t> SyndromeClassSizes(
    int n, int d, const ScanOptions& options = {});

// A maximum-cardinality class; ties go to the smallest syndrome.
CodeBook LargestSyndromeClass(int n, int d, const ScanOptions& options = {});

// d = 2: all permutations ending in n, one per cyclic-shift class.
// Throws GuardExceeded when (n-1)! > max_words.
CodeBook CyclicClassCode(int n,
                         std::int64_t max_words = Guards{}.max_generated_words);

// d = n - 1, n even: word i is (i, i + a_1, i + a_1 + a_2, ...) mod n with
// steps a = (1, n-2, 3, n-4, ..., 2, n-1); residue 0 is written as n.
// Throws std::invalid_argument for odd n or n < 2.
CodeBook EvenNCode(int n);
// The step sequence a_1..a_{n-1} used by EvenNCode.
std::vector<int> EvenNSteps(int n);

// d = n - 1, n + 1 prime: word i is (i, 2i, ..., ni) mod (n + 1).
// Throws std::invalid_argument when n + 1 is not prime.
CodeBook Zn1Code(int n);

// d = n - 1, n odd: strips infinity from a Hamiltonian decomposition of the
// complete digraph on [n] + {infinity}. Returns nullopt when none exists.
// Throws std::invalid_argument for even n and GuardExceeded when n > max_n.
std::optional<CodeBook> HamDecompCode(int n, int max_n = Guards{}.max_hamiltonian_n);

}  // namespace blockperm

#endif  // BLOCKPERM_CONSTRUCTIONS_H_
