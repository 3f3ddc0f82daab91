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

#ifndef DWWT_SCHWINGER_H
#define DWWT_SCHWINGER_H

#include "dwwt/linalg.h"

namespace dwwt {

/// Clock and shift unitaries on C^N:
///   Z|q> = ω^q |q>,   X|q> = |q+1 mod N>,   ZX = ω XZ.
struct SchwingerPair {
    size_t dim;
    ComplexMatrix z;
    ComplexMatrix x;

    /// X Z^b, whose eigenvectors are the MUB states of slope b.
    ComplexMatrix xz_power(int64_t b) const;
};

SchwingerPair build_schwinger(int64_t n);

/// U^k for k >= 0 and (U†)^|k| for k < 0. NonUnitaryInput if U is not
/// unitary to 1e-10.
ComplexMatrix op_power(const ComplexMatrix &u, int64_t k);

/// diag(0, 1, ..., N-1).
ComplexMatrix position_op(int64_t n);

/// Fourier state |p=k> = N^{-1/2} Σ_q ω^{kq} |q>.
ComplexVector momentum_state(int64_t k, int64_t n);

/// Σ_k k |p=k><p=k|, assembled from explicit projectors so the eigenvalues
/// are exactly 0..N-1.
ComplexMatrix momentum_op(int64_t n);

/// Σ_k ω^{sign·k} |p=k><p=k|. sign = -1 reproduces X.
ComplexMatrix momentum_exponential(int64_t n, int sign);

}  // namespace dwwt

#endif
