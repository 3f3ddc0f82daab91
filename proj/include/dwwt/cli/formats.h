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

#ifndef DWWT_CLI_FORMATS_H
#define DWWT_CLI_FORMATS_H

#include <iosfwd>
#include <optional>
#include <string>

#include "dwwt/linalg.h"
#include "dwwt/tomography.h"

namespace dwwt::cli {

/// Shortest decimal that round-trips to the same double (at most 17
/// significant digits). Negative zero prints as "0".
std::string format_double(double v);

/// MatrixFile (JSON):
///   {"dim": N, "re": [[...N...], ...N rows], "im": [[...], ...]}
/// ParseError on malformed text or shape mismatch with "dim".
ComplexMatrix read_matrix_file(std::istream &in);
ComplexMatrix parse_matrix_text(const std::string &text);

/// Writes a MatrixFile. When `diagnostics` is set a "diagnostics" object is
/// appended; readers ignore it.
void write_matrix_file(
    std::ostream &out,
    const ComplexMatrix &m,
    const std::optional<ReconstructionDiagnostics> &diagnostics = std::nullopt);

/// RecordFile (JSON):
///   {"dim": N, "entries": [{"basis": "ddot0", "probs": [...]},
///                          {"basis": 0, "probs": [...]}, ...]}
/// Exactly one entry per basis label, in any order; each probs sums to 1
/// within 1e-6. Optional "shots" integer. ParseError otherwise.
MeasurementRecord read_record_file(std::istream &in);
MeasurementRecord parse_record_text(const std::string &text);
void write_record_file(std::ostream &out, const MeasurementRecord &rec);

}  // namespace dwwt::cli

#endif
