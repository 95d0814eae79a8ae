// Copyright 2026 The qci Authors
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

#ifndef QCI_TOOLS_CLI_HPP
#define QCI_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qci::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegativeResult = 1,  // valid input, bound not saturated
  kInputError = 2,
  kDetectorFailure = 3,
};

/// Runs the `qci` command line. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qci::cli

#endif  // QCI_TOOLS_CLI_HPP
