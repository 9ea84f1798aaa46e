// Copyright 2026 The walshgl Authors.
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

#ifndef WALSHGL_TOOLS_CLI_H_
#define WALSHGL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace walshgl::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCapacity = 3,
  kVerificationInfeasible = 4,
  kStatisticalFailure = 5,
};

// Runs the tool with argv[1..] = `args`. Artifacts go to `out` unless --out
// names a file; diagnostics and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace walshgl::cli

#endif  // WALSHGL_TOOLS_CLI_H_
