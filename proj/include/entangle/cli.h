// Copyright 2026 The Entangle Authors
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

#ifndef ENTANGLE_CLI_H_
#define ENTANGLE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace entangle {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitValidationError = 2,
  kExitSoundnessViolation = 3,
};

/// Entry point behind the `entangle` binary. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace entangle

#endif  // ENTANGLE_CLI_H_
