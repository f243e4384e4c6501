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

#include "blockperm/bounds.h"

#include <algorithm>

namespace blockperm {
namespace {

int HalfRadius(int d, const char* what) {
  if (d < 1 || d % 2 == 0) {
    throw std::invalid_argument(std::string(what) +
                                " is stated for odd d = 2t + 1 only; got d = " +
                                std::to_string(d));
  }
  return (d - 1) / 2;
}

BigInt CeilDiv(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

BigInt GvLower(int n, int d, BoundMode mode, const EnumerationOptions& options) {
  const int t = HalfRadius(d, "Gilbert-Varshamov bound");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigInt total = Factorial(n);
  if (mode == BoundMode::kExact) {
    const int radius = std::min(2 * t, n - 1);
    return CeilDiv(total, BallSizeExact(n, radius, options).size);
  }
  return CeilDiv(total, BallSizeBounds(n, 2 * t).second);
}

BigInt SpUpper(int n, int d, BoundMode mode, const EnumerationOptions& options) {
  const int t = HalfRadius(d, "sphere-packing bound");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigInt total = Factorial(n);
  if (mode == BoundMode::kExact) {
    const int radius = std::min(t, n - 1);
    return total / BallSizeExact(n, radius, options).size;
  }
  return total / BallSizeBounds(n, t).second;
}

NewUpperBound NewUpper(int n, int d) {
  if (d < 1 || d > n - 1) {
    throw std::out_of_range("new upper bound needs 1 <= d <= n-1; got n=" +
                            std::to_string(n) + " d=" + std::to_string(d));
  }
  const BigInt c = Binomial(n, d);
  BigRational exact(c * c * Factorial(n - d), Binomial(n - 1, n - d));
  BigInt floor = boost::multiprecision::numerator(exact) /
                 boost::multiprecision::denominator(exact);
  return {std::move(exact), std::move(floor)};
}

std::optional<BigInt> SpecialExact(int n, int d) {
  if (n < 1 || d < 1) return std::nullopt;
  if (d > n - 1) return BigInt(1);
  if (d == 1) return Factorial(n);
  if (n == 3 && d == 2) return BigInt(2);
  if (d == 2) return Factorial(n - 1);
  if (n == 5 && d == 4) return BigInt(4);
  if (d == n - 1) return BigInt(n);
  return std::nullopt;
}

bool CorollaryApplies(int n, int d) {
  const int t = HalfRadius(d, "corollary condition");
  if (d > n - 1) return false;
  if (!BallBoundsHypothesisHolds(n, t)) return false;
  return BigInt(n) * FallingProduct(n, 0, t) <= BigInt(d) * Factorial(d);
}

BoundReport MakeBoundReport(int n, int d, BoundMode mode,
                            const EnumerationOptions& options) {
  BoundReport r;
  r.n = n;
  r.d = d;
  r.exact_mode = mode == BoundMode::kExact;
  const bool even = d % 2 == 0;
  const int gv_d = even ? d + 1 : d;
  const int sp_d = even ? d - 1 : d;
  if (even) {
    r.notes.push_back("d is even: GV value is the d+1 bound, sphere-packing value is the d-1 bound");
  }
  try {
    r.gv_lower = GvLower(n, gv_d, mode, options);
  } catch (const std::exception& e) {
    r.notes.push_back(std::string("gv_lower unavailable: ") + e.what());
  }
  if (sp_d >= 1) {
    try {
      r.sp_upper = SpUpper(n, sp_d, mode, options);
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("sp_upper unavailable: ") + e.what());
    }
  }
  if (d >= 1 && d <= n - 1) {
    NewUpperBound nu = NewUpper(n, d);
    r.new_upper = std::move(nu.floor);
    r.new_upper_exact = std::move(nu.exact);
  } else {
    r.notes.push_back("new_upper unavailable: needs 1 <= d <= n-1");
  }
  r.special_exact = SpecialExact(n, d);
  r.corollary_applies = !even && CorollaryApplies(n, d);
  return r;
}

const std::vector<TableReference>& PublishedTable() {
  static const std::vector<TableReference> table = {
      {13, 9, BigInt("40320"), BigInt("24787")},
      {15, 11, BigInt("362880"), BigInt("44672")},
      {16, 11, BigInt("3628800"), BigInt("762415")},
      {17, 11, BigInt("39916800"), BigInt("13771113")},
      {17, 13, BigInt("3628800"), BigInt("74696")},
      {18, 11, BigInt("479001600"), BigInt("262461363")},
      {18, 13, BigInt("39916800"), BigInt("1423607")},
      {19, 11, BigInt("6227020800"), BigInt("5263805324")},
      {19, 13, BigInt("479001600"), BigInt("28551213")},
      {20, 13, BigInt("6227020800"), BigInt("601078154")},
  };
  return table;
}

std::vector<std::pair<int, int>> DefaultTableRows() {
  std::vector<std::pair<int, int>> rows;
  for (const auto& ref : PublishedTable()) rows.emplace_back(ref.n, ref.d);
  return rows;
}

std::vector<BoundReport> BoundTable(const std::vector<std::pair<int, int>>& rows) {
  std::vector<BoundReport> out;
  out.reserve(rows.size());
  for (const auto& [n, d] : rows) {
    out.push_back(MakeBoundReport(n, d, BoundMode::kEstimate));
  }
  return out;
}

std::vector<TableRowCheck> CheckTable(const std::vector<BoundReport>& computed,
                                      const std::vector<TableReference>& reference,
                                      int tolerance) {
  std::vector<TableRowCheck> out;
  for (const auto& ref : reference) {
    TableRowCheck check{ref.n, ref.d, false, 0, false};
    auto it = std::find_if(computed.begin(), computed.end(), [&](const BoundReport& r) {
      return r.n == ref.n && r.d == ref.d;
    });
    if (it != computed.end() && it->sp_upper && it->new_upper) {
      check.sp_matches = *it->sp_upper == ref.sp_upper;
      check.new_deviation = *it->new_upper - ref.new_upper;
      check.ok = check.sp_matches && abs(check.new_deviation) <= tolerance;
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace blockperm
