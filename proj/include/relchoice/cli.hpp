// Copyright 2026 The relchoice Authors
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

#ifndef RELCHOICE_CLI_HPP_
#define RELCHOICE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace relchoice {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // a verification or invariant check failed
  kExitUsage = 2,      // bad flags or unreadable input
};

// Runs one CLI invocation. `args` excludes the program name. Input named
// "-" (the default) is read from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace relchoice

#endif  // RELCHOICE_CLI_HPP_
