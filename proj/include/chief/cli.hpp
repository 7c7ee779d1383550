// Copyright 2026 The Chief Authors
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

#ifndef CHIEF_CLI_HPP_
#define CHIEF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace chief {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitAlgorithm = 4;

// Entry point of the `chief` tool. `args` excludes the program name.
// Subcommands: cluster, kscan, bench, synth, decompose, audit, cii.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace chief

#endif  // CHIEF_CLI_HPP_
