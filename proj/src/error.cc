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

#include "dwwt/error.h"

namespace dwwt {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::CompositeDimension:
            return "CompositeDimension";
        case ErrorCode::UnsupportedDimension:
            return "UnsupportedDimension";
        case ErrorCode::ModulusMismatch:
            return "ModulusMismatch";
        case ErrorCode::ZeroInverse:
            return "ZeroInverse";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NonUnitaryInput:
            return "NonUnitaryInput";
        case ErrorCode::WrongBasisKind:
            return "WrongBasisKind";
        case ErrorCode::IdenticalLines:
            return "IdenticalLines";
        case ErrorCode::MixedParameters:
            return "MixedParameters";
        case ErrorCode::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorCode::InvalidDensityMatrix:
            return "InvalidDensityMatrix";
        case ErrorCode::InvalidPhaseParam:
            return "InvalidPhaseParam";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::UnknownBasisLabel:
            return "UnknownBasisLabel";
        case ErrorCode::InvalidRecord:
            return "InvalidRecord";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace dwwt
