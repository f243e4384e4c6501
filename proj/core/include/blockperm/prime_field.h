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

#ifndef BLOCKPERM_PRIME_FIELD_H_
#define BLOCKPERM_PRIME_FIELD_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "blockperm/permutation.h"

namespace blockperm {

using FieldElement = std::uint32_t;

// Arithmetic modulo a prime q < 2^31.
class PrimeField {
 public:
  // Throws std::invalid_argument unless q is a prime below 2^31.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  FieldElement Add(FieldElement a, FieldElement b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<FieldElement>(s >= q_ ? s - q_ : s);
  }
  FieldElement Mul(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>(std::uint64_t{a} * b % q_);
  }

 private:
  std::uint32_t q_;
};

bool IsPrime(std::uint64_t v);

// Smallest prime q >= n(n-1)/2. Throws std::invalid_argument for n < 2.
PrimeField SelectPrime(int n);

// Maps each unordered pair {x, y} of [n] to its lexicographic rank among all
// unordered pairs (x < y), so V(x, y) = V(y, x) and distinct unordered pairs
// get distinct values in [0, n(n-1)/2).
class PairEncoder {
 public:
  // Throws std::invalid_argument when q < n(n-1)/2 or n < 1.
  PairEncoder(int n, PrimeField field);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  FieldElement Encode(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_ + 1) +
                  static_cast<std::size_t>(y)];
  }

 private:
  int n_;
  PrimeField field_;
  std::vector<FieldElement> table_;
};

struct Syndrome {
  int d = 0;
  std::vector<FieldElement> values;  // e_1 .. e_{d-1}

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
  friend auto operator<=>(const Syndrome&, const Syndrome&) = default;
};

// First d-1 elementary symmetric polynomials of the encoded adjacency pairs
// of p, over F_q. Coordinates beyond n-1 are zero. Throws
// std::invalid_argument for d < 2 or when p.size() != enc.n().
Syndrome ComputeSyndrome(const Permutation& p, int d, const PairEncoder& enc);
// Allocation-free variant for scans; `out` receives d-1 values.
void ComputeSyndrome(std::span<const int> image, int d, const PairEncoder& enc,
                     std::vector<FieldElement>& scratch,
                     std::vector<FieldElement>& out);

}  // namespace blockperm

template <>
struct std::hash<blockperm::Syndrome> {
  std::size_t operator()(const blockperm::Syndrome& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.d);
    for (auto v : s.values) h = h * 1000003u + v;
    return h;
  }
};

#endif  // BLOCKPERM_PRIME_FIELD_H_
