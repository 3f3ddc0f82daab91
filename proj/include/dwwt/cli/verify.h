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

#ifndef DWWT_CLI_VERIFY_H
#define DWWT_CLI_VERIFY_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dwwt/lines.h"

namespace dwwt::cli {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status;
    double max_residual;
    double tol;
    std::string note;
};

struct VerifyOptions {
    bool deep = false;
    uint64_t seed = 20260101;
    size_t random_samples = 20;
};

/// Runs every phase-space identity for one (N, c). Deep mode adds the
/// Schwinger-sum route, MUB unbiasedness and exhaustive line geometry.
std::vector<CheckResult> run_verification(const PhaseParam &c, const VerifyOptions &options);

/// "PASS  name  max_residual=... tol=..." per check.
void print_checks(std::ostream &out, const std::vector<CheckResult> &checks);

bool all_passed(const std::vector<CheckResult> &checks);

}  // namespace dwwt::cli

#endif
