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

#ifndef BLOCKPERM_COMMON_H_
#define BLOCKPERM_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockperm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Thrown when an exhaustive operation is asked to run beyond its configured
// instance-size limit. Limits are always overridable by the caller.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default instance-size limits shared by the library and the CLI.
struct Guards {
  int max_enumeration_n = 8;    // full scans of S_n
  int max_graph_n = 7;          // explicit block graphs
  int max_definition_n = 8;     // segmentation-based distance oracle
  int max_hamiltonian_n = 9;    // Hamiltonian decomposition search
  std::int64_t max_words = 10000;          // pairwise code verification
  std::int64_t max_generated_words = 1000000;  // explicit code listings
  int max_independent_set_vertices = 1000;
};

// Number of worker threads for parallel scans. Zero selects the value of the
// BLOCKPERM_THREADS environment variable, or the hardware concurrency.
int ResolveThreadCount(int requested);

BigInt Factorial(int n);
BigInt Binomial(int n, int k);
// Product (n - lo) * (n - lo - 1) * ... * (n - hi); empty products are 1.
BigInt FallingProduct(int n, int lo, int hi);

}  // namespace blockperm

#endif  // BLOCKPERM_COMMON_H_
