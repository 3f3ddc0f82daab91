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

#ifndef DWWT_RANDOM_MATRICES_H
#define DWWT_RANDOM_MATRICES_H

#include <cstdint>
#include <random>

#include "dwwt/linalg.h"
#include "dwwt/tomography.h"

namespace dwwt {

/// Seeded source of test operators. Entries come from raw std::mt19937_64
/// output, so sequences are identical across standard libraries.
class MatrixSampler {
   public:
    explicit MatrixSampler(uint64_t seed) : engine_(seed) {
    }

    /// Uniform in [-1, 1).
    double uniform();

    /// Entries uniform in [-1, 1) for real and imaginary parts, then
    /// Hermitian-symmetrized.
    ComplexMatrix hermitian(size_t n);

    /// G G† / Tr(G G†) for G with uniform entries: full rank, unit trace.
    DensityMatrix density(size_t n);

    /// |ψ><ψ| for a uniformly-filled normalized ψ.
    DensityMatrix pure_state(size_t n);

   private:
    std::mt19937_64 engine_;
};

}  // namespace dwwt

#endif
