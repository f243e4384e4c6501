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

#ifndef BLOCKPERM_BOUNDS_H_
#define BLOCKPERM_BOUNDS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockperm/common.h"
#include "blockperm/enumeration.h"

namespace blockperm {

// kExact measures ball sizes by enumerating S_n; kEstimate substitutes the
// closed-form ball products and is available at any n where their
// hypothesis holds.
enum class BoundMode { kExact, kEstimate };

// Lower bounds round up, upper bounds round down. Every function here takes
// d = 2t + 1 and throws std::invalid_argument for even d.

// ceil(n! / |b_B(n, 2t)|). Estimate mode uses prod_{i=0..2t} (n - i) for the
// ball and throws std::out_of_range unless 2t <= n - sqrt(n) - 1.
BigInt GvLower(int n, int d, BoundMode mode, const EnumerationOptions& options = {});

// Exact mode: floor(n! / |b_B(n, t)|). Estimate mode: n! / prod_{i=0..t}
// (n - i) = (n - t - 1)!, the smallest value the true bound can take, which
// is what the published comparison table lists.
BigInt SpUpper(int n, int d, BoundMode mode, const EnumerationOptions& options = {});

struct NewUpperBound {
  BigRational exact;
  BigInt floor;
};

// C(n, d)^2 (n - d)! / C(n - 1, n - d). Throws std::out_of_range unless
// 1 <= d <= n - 1.
NewUpperBound NewUpper(int n, int d);

// Known exact values of C_B(n, d): n! for d = 1, (n-1)! for d = 2, n for
// d = n - 1 (except C_B(3,2) = 2, C_B(5,4) = 4), 1 for d > n - 1.
std::optional<BigInt> SpecialExact(int n, int d);

// True iff t <= n - sqrt(n) - 1, n * prod_{i=0..t} (n - i) <= d * d! and
// d <= n - 1, in which case NewUpper(n, d).floor <= (n - t - 1)!.
bool CorollaryApplies(int n, int d);

struct BoundReport {
  int n = 0;
  int d = 0;
  bool exact_mode = false;
  std::optional<BigInt> gv_lower;
  std::optional<BigInt> sp_upper;
  std::optional<BigInt> new_upper;
  std::optional<BigRational> new_upper_exact;
  std::optional<BigInt> special_exact;
  bool corollary_applies = false;
  // Explanations for substituted or unavailable values, one per line.
  std::vector<std::string> notes;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Collects every bound that applies to (n, d). Inapplicable values are left
// empty with a note instead of throwing. Even d uses the GV bound of d + 1
// and the sphere-packing bound of d - 1, both valid for d, and says so.
BoundReport MakeBoundReport(int n, int d, BoundMode mode,
                            const EnumerationOptions& options = {});

struct TableReference {
  int n = 0;
  int d = 0;
  BigInt sp_upper;
  BigInt new_upper;
};

// Published sphere-packing vs. new-bound comparison rows.
const std::vector<TableReference>& PublishedTable();
std::vector<std::pair<int, int>> DefaultTableRows();

// Estimate-mode reports for each (n, d).
std::vector<BoundReport> BoundTable(const std::vector<std::pair<int, int>>& rows);

struct TableRowCheck {
  int n = 0;
  int d = 0;
  bool sp_matches = false;
  BigInt new_deviation;  // computed floor minus reference value
  bool ok = false;
};

// Sphere-packing column must match exactly; the new-bound column within
// +/- tolerance. Rows missing from `computed` fail.
std::vector<TableRowCheck> CheckTable(const std::vector<BoundReport>& computed,
                                      const std::vector<TableReference>& reference,
                                      int tolerance = 1);

}  // namespace blockperm

#endif  // BLOCKPERM_BOUNDS_H_
