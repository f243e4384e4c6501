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

#include "blockperm/serialization.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace blockperm {
namespace {

using nlohmann::json;

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename F>
auto Guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("unexpected JSON shape: ") + e.what());
  }
}

std::string RationalString(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

BigRational ParseRational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(s));
  return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

BigInt ParseBigInt(const std::string& s) {
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return BigInt(s);
}

json OptionalBig(const std::optional<BigInt>& v) {
  return v ? json(v->str()) : json(nullptr);
}

std::optional<BigInt> ReadOptionalBig(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return ParseBigInt(j.at(key).get<std::string>());
}

}  // namespace

std::string FormatPermutation(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[static_cast<std::size_t>(i)]);
  }
  return out;
}

Permutation ParsePermutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::invalid_argument("not a label: '" + token + "'");
    }
    values.push_back(v);
  }
  return Permutation::FromOneLine(values);
}

std::vector<Permutation> ReadPermutations(std::istream& in) {
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(ParsePermutation(t));
  }
  return out;
}

std::string CharSetToJson(const CharSet& c) {
  json pairs = json::array();
  for (const auto& p : c.pairs) pairs.push_back({p.first, p.second});
  return json{{"n", c.n}, {"pairs", pairs}}.dump();
}

CharSet CharSetFromJson(std::string_view text) {
  const json j = Parse(text);
  CharSet c = Guarded([&] {
    CharSet out;
    out.n = j.at("n").get<int>();
    for (const auto& p : j.at("pairs")) {
      out.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    }
    return out;
  });
  std::sort(c.pairs.begin(), c.pairs.end());
  if (!IsPathUnion(c)) {
    throw std::invalid_argument("pairs do not form a union of directed paths on [n]");
  }
  return c;
}

void WriteCodeBookText(std::ostream& out, const CodeBook& code) {
  out << code.n() << ' ' << code.design_distance() << ' ' << code.provenance() << '\n';
  for (const auto& w : code.words()) out << FormatPermutation(w) << '\n';
}

CodeBook ReadCodeBookText(std::istream& in) {
  std::string header;
  do {
    if (!std::getline(in, header)) throw std::invalid_argument("empty code file");
  } while (Trim(header).empty());
  std::istringstream hs(header);
  int n = 0;
  int d = 0;
  if (!(hs >> n >> d)) {
    throw std::invalid_argument("code file header must be 'n d provenance'");
  }
  std::string provenance;
  std::getline(hs, provenance);
  provenance = Trim(provenance);
  if (provenance.empty()) provenance = "file";
  return CodeBook(n, d, provenance, ReadPermutations(in));
}

std::string CodeBookToJson(const CodeBook& code) {
  json words = json::array();
  for (const auto& w : code.words()) {
    words.push_back(std::vector<int>(w.image().begin(), w.image().end()));
  }
  json j{{"n", code.n()},
         {"design_distance", code.design_distance()},
         {"provenance", code.provenance()},
         {"size", code.size()},
         {"verified_min_distance", code.verified_min_distance()
                                       ? json(*code.verified_min_distance())
                                       : json(nullptr)},
         {"words", words}};
  return j.dump();
}

CodeBook CodeBookFromJson(std::string_view text) {
  const json j = Parse(text);
  return Guarded([&] {
    std::vector<Permutation> words;
    for (const auto& w : j.at("words")) {
      words.push_back(Permutation::FromOneLine(w.get<std::vector<int>>()));
    }
    CodeBook code(j.at("n").get<int>(), j.at("design_distance").get<int>(),
                  j.at("provenance").get<std::string>(), std::move(words));
    if (j.contains("verified_min_distance") && !j.at("verified_min_distance").is_null()) {
      code.set_verified_min_distance(j.at("verified_min_distance").get<int>());
    }
    return code;
  });
}

void WriteSphereProfileCsv(std::ostream& out, const SphereProfile& profile) {
  out << "k,count\n";
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    out << k << ',' << profile.counts[k] << '\n';
  }
}

std::string SphereProfileToJson(const SphereProfile& profile) {
  return json{{"n", profile.n}, {"counts", profile.counts}}.dump();
}

SphereProfile SphereProfileFromJson(std::string_view text) {
  const json j = Parse(text);
  return Guarded([&] {
    return SphereProfile{j.at("n").get<int>(),
                         j.at("counts").get<std::vector<std::uint64_t>>()};
  });
}

std::string BoundReportToJson(const BoundReport& r) {
  json j{{"n", r.n},
         {"d", r.d},
         {"exact_mode", r.exact_mode},
         {"gv_lower", OptionalBig(r.gv_lower)},
         {"sp_upper", OptionalBig(r.sp_upper)},
         {"new_upper", OptionalBig(r.new_upper)},
         {"new_upper_exact",
          r.new_upper_exact ? json(RationalString(*r.new_upper_exact)) : json(nullptr)},
         {"special_exact", OptionalBig(r.special_exact)},
         {"corollary_applies", r.corollary_applies},
         {"notes", r.notes}};
  return j.dump();
}

BoundReport BoundReportFromJson(std::string_view text) {
  const json j = Parse(text);
  return Guarded([&] {
    BoundReport r;
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.exact_mode = j.at("exact_mode").get<bool>();
    r.gv_lower = ReadOptionalBig(j, "gv_lower");
    r.sp_upper = ReadOptionalBig(j, "sp_upper");
    r.new_upper = ReadOptionalBig(j, "new_upper");
    if (j.contains("new_upper_exact") && !j.at("new_upper_exact").is_null()) {
      r.new_upper_exact = ParseRational(j.at("new_upper_exact").get<std::string>());
    }
    r.special_exact = ReadOptionalBig(j, "special_exact");
    r.corollary_applies = j.at("corollary_applies").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

std::string NeighborhoodStatsToJson(const NeighborhoodStats& s) {
  json j{{"n", s.n},
         {"d", s.d},
         {"delta", s.delta},
         {"p_edges", s.p_edges},
         {"triangles", s.triangle_count},
         {"zero_x_edges", s.zero_x_edge_count},
         {"layer_sizes", s.layer_sizes}};
  return j.dump();
}

std::vector<TableReference> ReadTableReferenceCsv(std::istream& in) {
  std::vector<TableReference> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == 'n') continue;  // header
    std::vector<std::string> cells;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(Trim(cell));
    if (cells.size() != 4) {
      throw std::invalid_argument("table row needs 4 columns: '" + t + "'");
    }
    TableReference ref;
    ref.n = static_cast<int>(ParseBigInt(cells[0]));
    ref.d = static_cast<int>(ParseBigInt(cells[1]));
    ref.sp_upper = ParseBigInt(cells[2]);
    ref.new_upper = ParseBigInt(cells[3]);
    rows.push_back(std::move(ref));
  }
  return rows;
}

}  // namespace blockperm
