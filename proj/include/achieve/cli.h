// Copyright 2026 The Achievement Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACHIEVE_CLI_H_
#define ACHIEVE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace achieve {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

// Runs the tool. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
//
//   analyze <game.json> [--profile <profile.json>] [--defector Q]
//           [--brute-force] [--iesds]
//   table --agents N --goals M [--delta Q] [--types ABO|full] [--output F]
//   sweep --agents N --goals M [--delta Q] [--cutoff Q] [--bin-width Q]
//         [--workers W] [--types ABO|full] [--allow-large]
//         [--output F] [--binned-output F]
//   verify-theorem --agents N [--trials T] [--seed S]
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace achieve

#endif  // ACHIEVE_CLI_H_
