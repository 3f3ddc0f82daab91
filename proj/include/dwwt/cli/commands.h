// Copyright 2026 The dwwt Authors
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

#ifndef DWWT_CLI_COMMANDS_H
#define DWWT_CLI_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "dwwt/error.h"

namespace dwwt::cli {

/// Process exit statuses. Stable so scripts and CI can branch on them.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDimension = 3,
    kExitNonHermitian = 4,
    kExitUnknownBasis = 5,
    kExitVerifyFailed = 6,
};

int exit_code_for(ErrorCode code);

/// Entry point shared by the `dwwt` binary and the tests. `args` excludes
/// the program name. `in` backs `--state -`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace dwwt::cli

#endif
