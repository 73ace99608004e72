// Copyright 2026 The fracrev Authors.
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

#ifndef FRACREV_TOOLS_CLI_HPP_
#define FRACREV_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fracrev::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;          // found / pass
inline constexpr int kExitNegative = 1;    // not found / fail
inline constexpr int kExitParse = 2;       // malformed input
inline constexpr int kExitValidation = 3;  // invalid group or connection set
inline constexpr int kExitHypothesis = 4;  // family preconditions violated

/// Runs `fr <args...>`; args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracrev::cli

#endif  // FRACREV_TOOLS_CLI_HPP_
