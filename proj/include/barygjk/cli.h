// Copyright 2026 The BaryGJK Authors
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

#ifndef BARYGJK_CLI_H_
#define BARYGJK_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace barygjk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // mismatch or validation failure
inline constexpr int kExitUsage = 2;

// Entry point of the `barygjk` tool: subcommands gen, check, bench, query.
// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barygjk::cli

#endif  // BARYGJK_CLI_H_
