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

#ifndef BLOCKPERM_TOOLS_CLI_H_
#define BLOCKPERM_TOOLS_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace blockperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;       // bad flags, malformed input
inline constexpr int kExitVerification = 2;  // a check did not hold

// Runs one command line (without the program name). Reads code files named
// "-" from `in`.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace blockperm::cli

#endif  // BLOCKPERM_TOOLS_CLI_H_
