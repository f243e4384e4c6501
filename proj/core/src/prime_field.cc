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

#include "blockperm/prime_field.h"

#include <string>

namespace blockperm {

bool IsPrime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 31) || !IsPrime(q)) {
    throw std::invalid_argument("field modulus " + std::to_string(q) +
                                " is not a prime below 2^31");
  }
}

PrimeField SelectPrime(int n) {
  if (n < 2) throw std::invalid_argument("prime selection needs n >= 2");
  std::uint64_t q = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  while (!IsPrime(q)) ++q;
  return PrimeField(static_cast<std::uint32_t>(q));
}

PairEncoder::PairEncoder(int n, PrimeField field) : n_(n), field_(field) {
  if (n < 1) throw std::invalid_argument("pair encoder needs n >= 1");
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  if (field.modulus() < pairs) {
    throw std::invalid_argument("field size " + std::to_string(field.modulus()) +
                                " is smaller than n(n-1)/2 = " +
                                std::to_string(pairs));
  }
  const auto stride = static_cast<std::size_t>(n + 1);
  table_.assign(stride * stride, 0);
  FieldElement rank = 0;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y, ++rank) {
      table_[static_cast<std::size_t>(x) * stride + static_cast<std::size_t>(y)] = rank;
      table_[static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(x)] = rank;
    }
  }
}

void ComputeSyndrome(std::span<const int> image, int d, const PairEncoder& enc,
                     std::vector<FieldElement>& scratch,
                     std::vector<FieldElement>& out) {
  const PrimeField& f = enc.field();
  // scratch[k] holds e_k of the values seen so far; multiplying the running
  // product by (x + gamma) updates e_k += gamma * e_{k-1}, high k first.
  scratch.assign(static_cast<std::size_t>(d), 0);
  scratch[0] = 1;
  for (std::size_t i = 0; i + 1 < image.size(); ++i) {
    const FieldElement gamma = enc.Encode(image[i], image[i + 1]);
    for (std::size_t k = static_cast<std::size_t>(d) - 1; k >= 1; --k) {
      scratch[k] = f.Add(scratch[k], f.Mul(gamma, scratch[k - 1]));
    }
  }
  out.assign(scratch.begin() + 1, scratch.end());
}

Syndrome ComputeSyndrome(const Permutation& p, int d, const PairEncoder& enc) {
  if (d < 2) throw std::invalid_argument("syndrome needs design distance d >= 2");
  if (p.size() != enc.n()) {
    throw std::invalid_argument("syndrome: permutation size " +
                                std::to_string(p.size()) +
                                " does not match encoder size " +
                                std::to_string(enc.n()));
  }
  Syndrome s{d, {}};
  std::vector<FieldElement> scratch;
  ComputeSyndrome(p.image(), d, enc, scratch, s.values);
  return s;
}

}  // namespace blockperm
