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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.h"
#include "blockperm/bounds.h"
#include "blockperm/codebook.h"
#include "blockperm/constructions.h"
#include "blockperm/enumeration.h"
#include "blockperm/graph.h"
#include "blockperm/permutation.h"
#include "blockperm/prime_field.h"
#include "blockperm/serialization.h"

namespace blockperm::cli {
namespace {

// Raised for failed checks that should map to kExitVerification.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  int max_n = 0;  // 0 keeps the per-operation defaults
  std::int64_t max_words = Guards{}.max_words;
  int threads = 0;
  std::string format = "text";
};

Guards EffectiveGuards(const GlobalFlags& g, std::ostream& err) {
  Guards guards;
  if (g.max_n > 0) {
    if (g.max_n > guards.max_enumeration_n || g.max_n > guards.max_graph_n ||
        g.max_n > guards.max_hamiltonian_n) {
      err << "warning: size guard raised to n = " << g.max_n
          << "; exhaustive operations may take very long\n";
    }
    guards.max_enumeration_n = g.max_n;
    guards.max_graph_n = g.max_n;
    guards.max_definition_n = g.max_n;
    guards.max_hamiltonian_n = g.max_n;
  }
  if (g.max_words != Guards{}.max_words) {
    err << "warning: pairwise verification guard set to " << g.max_words << " words\n";
  }
  guards.max_words = g.max_words;
  return guards;
}

std::vector<FieldElement> ParseSyndromeValues(const std::string& text) {
  std::vector<FieldElement> values;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(cell, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != cell.size()) {
      throw std::invalid_argument("bad syndrome value '" + cell + "'");
    }
    values.push_back(static_cast<FieldElement>(v));
  }
  return values;
}

void EmitCode(const CodeBook& code, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << CodeBookToJson(code) << '\n';
  } else {
    WriteCodeBookText(out, code);
  }
}

CodeBook LoadCode(const std::string& path, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open '" + path + "'");
    src = &file;
  }
  std::stringstream buffer;
  buffer << src->rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return CodeBookFromJson(text);
  std::istringstream lines(text);
  return ReadCodeBookText(lines);
}

void PrintTable(const std::vector<BoundReport>& reports,
                const std::vector<TableRowCheck>& checks,
                const std::vector<TableReference>& reference, const std::string& format,
                std::ostream& out) {
  if (format == "csv") {
    out << "n,d,sp_upper_estimate,new_upper,new_upper_exact,reference,deviation,ok\n";
  } else if (format == "text") {
    out << std::setw(3) << "n" << std::setw(4) << "d" << std::setw(14) << "SP estimate"
        << std::setw(14) << "new bound" << std::setw(24) << "new bound (exact)"
        << std::setw(14) << "reference" << std::setw(8) << "delta" << "  status\n";
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const auto& c = checks[i];
    const std::string sp = r.sp_upper ? r.sp_upper->str() : "-";
    const std::string nu = r.new_upper ? r.new_upper->str() : "-";
    std::string exact = "-";
    if (r.new_upper_exact) {
      exact = boost::multiprecision::numerator(*r.new_upper_exact).str() + "/" +
              boost::multiprecision::denominator(*r.new_upper_exact).str();
    }
    if (format == "csv") {
      out << r.n << ',' << r.d << ',' << sp << ',' << nu << ',' << exact << ','
          << reference[i].new_upper << ',' << c.new_deviation << ',' << (c.ok ? "true" : "false") << '\n';
    } else {
      out << std::setw(3) << r.n << std::setw(4) << r.d << std::setw(14) << sp
          << std::setw(14) << nu << std::setw(24) << exact
          << std::setw(14) << reference[i].new_upper << std::setw(8) << c.new_deviation << "  " << (c.ok ? "ok" : "DEVIATES") << '\n';
    }
  }
}

void PrintReport(const BoundReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << BoundReportToJson(r) << '\n';
    return;
  }
  auto show = [](const std::optional<BigInt>& v) { return v ? v->str() : std::string("n/a"); };
  out << "n = " << r.n << "\n"
      << "d = " << r.d << "\n"
      << "mode = " << (r.exact_mode ? "exact" : "estimate") << "\n"
      << "gv_lower = " << show(r.gv_lower) << "\n"
      << "sp_upper = " << show(r.sp_upper) << "\n"
      << "new_upper = " << show(r.new_upper) << "\n";
  if (r.new_upper_exact) {
    out << "new_upper_exact = " << boost::multiprecision::numerator(*r.new_upper_exact) << "/"
        << boost::multiprecision::denominator(*r.new_upper_exact) << "\n";
  }
  out << "special_exact = " << show(r.special_exact) << "\n"
      << "corollary_applies = " << (r.corollary_applies ? "true" : "false") << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Permutation codes under the block permutation metric", "blockperm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "blockperm 0.1.0");

  GlobalFlags g;
  app.add_option("--max-n", g.max_n, "Raise or lower the exhaustive-size guard")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-words", g.max_words, "Pairwise verification guard")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads,
                 "Worker threads (default: BLOCKPERM_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // dist
  std::string dist_a, dist_b;
  bool dist_definition = false;
  auto* dist = app.add_subcommand("dist", "Block distance between two permutations");
  dist->add_option("p1", dist_a, "Quoted, space-separated labels")->required();
  dist->add_option("p2", dist_b, "Quoted, space-separated labels")->required();
  dist->add_flag("--definition", dist_definition,
                 "Also search block segmentations and print a witness");

  // charset
  std::string charset_p;
  auto* charset = app.add_subcommand("charset", "Characteristic set of a permutation");
  charset->add_option("p", charset_p)->required();

  // spheres
  int spheres_n = 0;
  bool spheres_check = false;
  auto* spheres = app.add_subcommand("spheres", "Sphere sizes |R(n,k)| by enumeration");
  spheres->add_option("--n", spheres_n)->required()->check(CLI::PositiveNumber);
  spheres->add_flag("--check-formula", spheres_check,
                    "Compare against the closed form; exit 2 on mismatch");

  // ball
  int ball_n = 0, ball_t = 0;
  bool ball_bounds = false;
  auto* ball = app.add_subcommand("ball", "Ball size |b_B(n,t)|");
  ball->add_option("--n", ball_n)->required()->check(CLI::PositiveNumber);
  ball->add_option("--t", ball_t)->required()->check(CLI::NonNegativeNumber);
  ball->add_flag("--bounds", ball_bounds, "Also print the product bounds");

  // construct
  std::string method;
  int cons_n = 0, cons_d = 0;
  std::string cons_f, cons_output;
  bool cons_verify = false;
  auto* construct = app.add_subcommand("construct", "Build a code");
  construct->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"syndrome", "cyclic", "even", "zn1", "hamdecomp"}));
  construct->add_option("--n", cons_n)->required()->check(CLI::PositiveNumber);
  construct->add_option("--d", cons_d, "Design distance (syndrome method)");
  construct->add_option("--f", cons_f, "Syndrome v1,v2,...; default: largest class");
  construct->add_option("-o,--output", cons_output, "Write the code to a file");
  construct->add_flag("--verify", cons_verify, "Verify the minimum distance");

  // verify
  std::string verify_path = "-";
  int verify_d = 0;
  auto* verify = app.add_subcommand("verify", "Check a code file against a design distance");
  verify->add_option("--d", verify_d, "Design distance (default: file header)");
  verify->add_option("codefile", verify_path, "Code file, '-' for stdin");

  // bounds
  int bounds_n = 0, bounds_d = 0;
  bool bounds_exact = false, bounds_table = false;
  std::string table_file;
  auto* bounds = app.add_subcommand("bounds", "Bound calculators");
  bounds->add_option("--n", bounds_n)->check(CLI::PositiveNumber);
  bounds->add_option("--d", bounds_d)->check(CLI::PositiveNumber);
  bounds->add_flag("--exact", bounds_exact, "Enumerate balls instead of estimating");
  bounds->add_flag("--table1", bounds_table, "Reproduce the published comparison table");
  bounds->add_option("--table1-file", table_file, "Reference rows n,d,sp,new");

  // graph
  int graph_n = 0, graph_d = 0;
  bool graph_stats = false, graph_greedy = false, graph_exact = false;
  std::string graph_order = "lex";
  auto* graph = app.add_subcommand("graph", "Block permutation graph analysis");
  graph->add_option("--n", graph_n)->required()->check(CLI::PositiveNumber);
  graph->add_option("--d", graph_d)->required()->check(CLI::PositiveNumber);
  auto* stats_flag = graph->add_flag("--stats", graph_stats);
  auto* greedy_flag = graph->add_flag("--greedy", graph_greedy);
  auto* exact_flag = graph->add_flag("--exact", graph_exact);
  stats_flag->excludes(greedy_flag)->excludes(exact_flag);
  greedy_flag->excludes(exact_flag);
  graph->add_option("--order", graph_order)->check(CLI::IsMember({"lex", "degree"}));

  // selftest
  std::string selftest_table;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--table1-file", selftest_table, "Reference rows n,d,sp,new");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitInvalid;
  }

  try {
    const Guards guards = EffectiveGuards(g, err);
    const std::string& fmt = g.format;

    if (dist->parsed()) {
      const Permutation a = ParsePermutation(dist_a);
      const Permutation b = ParsePermutation(dist_b);
      const int d = BlockDistance(a, b);
      if (!dist_definition) {
        if (fmt == "json") {
          out << "{\"distance\":" << d << "}\n";
        } else {
          out << d << '\n';
        }
        return kExitOk;
      }
      const SegmentationWitness w = DistanceByDefinitionWitness(a, b, std::max(guards.max_definition_n, 9));
      out << w.distance << '\n';
      out << "blocks:";
      for (const auto& blk : w.blocks) {
        out << " (";
        for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
        out << ")";
      }
      out << "\norder: " << FormatPermutation(w.order) << '\n';
      if (w.distance != d) throw VerificationFailure("segmentation distance disagrees");
      return kExitOk;
    }

    if (charset->parsed()) {
      const CharSet c = CharacteristicSet(ParsePermutation(charset_p));
      if (fmt == "json") {
        out << CharSetToJson(c) << '\n';
      } else {
        for (std::size_t i = 0; i < c.pairs.size(); ++i) {
          out << (i ? " " : "") << '(' << c.pairs[i].first << ',' << c.pairs[i].second << ')';
        }
        out << '\n';
      }
      return kExitOk;
    }

    if (spheres->parsed()) {
      const SphereProfile prof =
          EnumerateSpheres(spheres_n, {guards.max_enumeration_n, g.threads});
      if (fmt == "json") {
        out << SphereProfileToJson(prof) << '\n';
      } else {
        WriteSphereProfileCsv(out, prof);
      }
      if (spheres_check) {
        for (int k = 1; k < spheres_n; ++k) {
          if (MyersCount(spheres_n, k) != prof.counts[static_cast<std::size_t>(k)]) {
            throw VerificationFailure("closed form disagrees at k = " + std::to_string(k));
          }
        }
      }
      return kExitOk;
    }

    if (ball->parsed()) {
      const BallSize b = BallSizeExact(ball_n, ball_t, {guards.max_enumeration_n, g.threads});
      std::optional<std::pair<BigInt, BigInt>> range;
      if (ball_bounds) range = BallSizeBounds(ball_n, ball_t);
      if (fmt == "json") {
        out << "{\"n\":" << b.n << ",\"t\":" << b.t << ",\"size\":\"" << b.size << "\"";
        if (range) out << ",\"lower\":\"" << range->first << "\",\"upper\":\"" << range->second << "\"";
        out << "}\n";
      } else {
        out << b.size << '\n';
        if (range) out << "lower " << range->first << "\nupper " << range->second << '\n';
      }
      if (range && !(range->first <= b.size && b.size <= range->second)) {
        throw VerificationFailure("ball size outside its product bounds");
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      std::optional<CodeBook> code;
      const ScanOptions scan{guards.max_enumeration_n, g.threads};
      if (method == "syndrome") {
        if (cons_d < 2) throw std::invalid_argument("--d >= 2 is required for the syndrome method");
        if (cons_d - 1 > cons_n - 1) {
          err << "warning: d - 1 exceeds the n - 1 symmetric values; extra coordinates are 0\n";
        }
        if (cons_f.empty()) {
          code = LargestSyndromeClass(cons_n, cons_d, scan);
        } else {
          Syndrome f{cons_d, ParseSyndromeValues(cons_f)};
          code = SyndromeClass(cons_n, cons_d, f, scan);
        }
      } else if (method == "cyclic") {
        code = CyclicClassCode(cons_n);
      } else if (method == "even") {
        code = EvenNCode(cons_n);
      } else if (method == "zn1") {
        code = Zn1Code(cons_n);
      } else {
        code = HamDecompCode(cons_n, guards.max_hamiltonian_n);
        if (!code) {
          err << "no Hamiltonian decomposition of the complete digraph on " << cons_n + 1
              << " vertices exists\n";
          return kExitVerification;
        }
      }
      if (cons_verify) {
        const int md = VerifyMinDistance(*code, guards.max_words);
        if (md < code->design_distance()) {
          throw VerificationFailure("minimum distance " + std::to_string(md) +
                                    " below design distance");
        }
      }
      if (!cons_output.empty()) {
        std::ofstream file(cons_output);
        if (!file) throw std::invalid_argument("cannot write '" + cons_output + "'");
        EmitCode(*code, fmt, file);
      } else {
        EmitCode(*code, fmt, out);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      CodeBook code = LoadCode(verify_path, in);
      const int target = verify_d > 0 ? verify_d : code.design_distance();
      const int md = VerifyMinDistance(code, guards.max_words);
      const bool ok = md >= target;
      if (fmt == "json") {
        out << "{\"n\":" << code.n() << ",\"d\":" << target << ",\"size\":" << code.size()
            << ",\"min_distance\":" << md << ",\"ok\":" << (ok ? "true" : "false") << "}\n";
      } else {
        out << "n " << code.n() << "\nd " << target << "\nsize " << code.size()
            << "\nmin_distance " << md << "\n" << (ok ? "ok" : "FAIL") << '\n';
      }
      return ok ? kExitOk : kExitVerification;
    }

    if (bounds->parsed()) {
      if (bounds_table) {
        std::vector<TableReference> reference = PublishedTable();
        if (!table_file.empty()) {
          std::ifstream file(table_file);
          if (!file) throw std::invalid_argument("cannot open '" + table_file + "'");
          reference = ReadTableReferenceCsv(file);
        }
        std::vector<std::pair<int, int>> rows;
        for (const auto& r : reference) rows.emplace_back(r.n, r.d);
        const auto reports = BoundTable(rows);
        const auto checks = CheckTable(reports, reference);
        if (fmt == "json") {
          out << '[';
          for (std::size_t i = 0; i < reports.size(); ++i) {
            out << (i ? "," : "") << BoundReportToJson(reports[i]);
          }
          out << "]\n";
        } else {
          PrintTable(reports, checks, reference, fmt, out);
        }
        const bool all_ok = std::all_of(checks.begin(), checks.end(),
                                        [](const TableRowCheck& c) { return c.ok; });
        return all_ok ? kExitOk : kExitVerification;
      }
      if (bounds_n == 0 || bounds_d == 0) {
        throw std::invalid_argument("bounds needs --n and --d, or --table1");
      }
      const BoundReport r = MakeBoundReport(
          bounds_n, bounds_d, bounds_exact ? BoundMode::kExact : BoundMode::kEstimate,
          {guards.max_enumeration_n, g.threads});
      PrintReport(r, fmt, out);
      return kExitOk;
    }

    if (graph->parsed()) {
      const GraphOptions opts{guards.max_graph_n, g.threads};
      if (!graph_greedy && !graph_exact) {
        out << NeighborhoodStatsToJson(ComputeNeighborhoodStats(graph_n, graph_d, opts)) << '\n';
        return kExitOk;
      }
      const BlockGraph bg = BuildGraph(graph_n, graph_d, opts);
      const CodeBook code =
          graph_exact ? ExactIndependentSet(bg, guards.max_independent_set_vertices)
                      : GreedyIndependentSet(bg, graph_order == "degree" ? GreedyOrder::kDegree
                                                                         : GreedyOrder::kLexicographic);
      EmitCode(code, fmt, out);
      return kExitOk;
    }

    if (selftest->parsed()) {
      acceptance::Options opts;
      opts.threads = g.threads;
      if (g.max_n > 0) opts.max_n = g.max_n;
      if (!selftest_table.empty()) {
        std::ifstream file(selftest_table);
        if (!file) throw std::invalid_argument("cannot open '" + selftest_table + "'");
        opts.table_reference = ReadTableReferenceCsv(file);
      }
      return acceptance::ExitCode(acceptance::RunAll(opts, out));
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace blockperm::cli
