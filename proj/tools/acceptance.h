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

#ifndef BLOCKPERM_TOOLS_ACCEPTANCE_H_
#define BLOCKPERM_TOOLS_ACCEPTANCE_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "blockperm/bounds.h"

namespace blockperm::acceptance {

struct Options {
  // Criteria that need exhaustive work beyond this n are skipped.
  int max_n = 7;
  int threads = 0;
  std::uint64_t seed = 20260416;
  // Replaces the built-in comparison table for criterion 4.
  std::optional<std::vector<TableReference>> table_reference;
};

struct CriterionResult {
  enum class Status { kPass, kFail, kSkip };

  int id = 0;
  std::string title;
  Status status = Status::kSkip;
  std::string detail;
  double seconds = 0;
};

// Runs every criterion in order and prints one line per criterion to `log`.
std::vector<CriterionResult> RunAll(const Options& options, std::ostream& log);

// 0 when nothing failed, 2 otherwise.
int ExitCode(const std::vector<CriterionResult>& results);

}  // namespace blockperm::acceptance

#endif  // BLOCKPERM_TOOLS_ACCEPTANCE_H_
