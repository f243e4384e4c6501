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

#ifndef BLOCKPERM_SERIALIZATION_H_
#define BLOCKPERM_SERIALIZATION_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "blockperm/bounds.h"
#include "blockperm/codebook.h"
#include "blockperm/enumeration.h"
#include "blockperm/graph.h"
#include "blockperm/permutation.h"

// Text, CSV and JSON formats. Labels are 1-based everywhere. Arbitrary
// precision integers are written to JSON as decimal strings and rationals as
// "num/den" strings so that no value is ever rounded. All parsers throw
// std::invalid_argument on malformed input.
namespace blockperm {

// "4 8 3 2 6 7 5 1 9"
std::string FormatPermutation(const Permutation& p);
Permutation ParsePermutation(std::string_view text);
// One permutation per line; blank lines and lines starting with '#' are
// skipped.
std::vector<Permutation> ReadPermutations(std::istream& in);

// {"n": n, "pairs": [[a, b], ...]}, pairs sorted lexicographically.
std::string CharSetToJson(const CharSet& c);
CharSet CharSetFromJson(std::string_view text);

// Header line "n d provenance", then one word per line.
void WriteCodeBookText(std::ostream& out, const CodeBook& code);
CodeBook ReadCodeBookText(std::istream& in);
// {"n", "design_distance", "provenance", "verified_min_distance", "size",
//  "words"}
std::string CodeBookToJson(const CodeBook& code);
CodeBook CodeBookFromJson(std::string_view text);

// CSV: "k,count" header then one row per k.
void WriteSphereProfileCsv(std::ostream& out, const SphereProfile& profile);
std::string SphereProfileToJson(const SphereProfile& profile);
SphereProfile SphereProfileFromJson(std::string_view text);

std::string BoundReportToJson(const BoundReport& report);
BoundReport BoundReportFromJson(std::string_view text);

std::string NeighborhoodStatsToJson(const NeighborhoodStats& stats);

// "n,d,sp_upper,new_upper" rows; an optional header line is skipped.
std::vector<TableReference> ReadTableReferenceCsv(std::istream& in);

}  // namespace blockperm

#endif  // BLOCKPERM_SERIALIZATION_H_
