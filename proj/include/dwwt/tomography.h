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

#ifndef DWWT_TOMOGRAPHY_H
#define DWWT_TOMOGRAPHY_H

#include <cstdint>
#include <optional>
#include <vector>

#include "dwwt/linalg.h"
#include "dwwt/mub.h"
#include "dwwt/wigner.h"

namespace dwwt {

/// Hermitian, unit-trace matrix. Positivity is not checked: reconstructions
/// from finite samples can have small negative eigenvalues.
class DensityMatrix {
   public:
    /// InvalidDensityMatrix if not Hermitian or trace != 1 within `tol`.
    explicit DensityMatrix(ComplexMatrix matrix, double tol = kDefaultTol);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    size_t dim() const noexcept {
        return matrix_.dim();
    }

   private:
    ComplexMatrix matrix_;
};

/// Born-rule probabilities in every MUB. probs is indexed by
/// BasisLabel::index() (ddot0 first), then by m.
struct MeasurementRecord {
    int64_t dim;
    std::vector<std::vector<double>> probs;
    std::optional<uint64_t> sample_count;

    const std::vector<double> &at(const BasisLabel &basis) const {
        return probs[basis.index()];
    }

    /// InvalidRecord unless there are N+1 vectors of N nonnegative entries,
    /// each summing to 1 within `tol`.
    void validate(double tol = 1e-9) const;
};

/// Exact probabilities <m;b|rho|m;b>.
MeasurementRecord simulate_probs(const DensityMatrix &rho);

/// Empirical frequencies from `shots` inverse-CDF draws per basis.
///
/// Each basis uses its own std::mt19937_64 seeded with
/// splitmix64(seed + (basis_index + 1) * 0x9E3779B97F4A7C15), and each uniform
/// is the top 53 bits of one engine output scaled by 2^-53. Output is
/// identical across platforms for fixed (rho, shots, seed).
MeasurementRecord sample_probs(const DensityMatrix &rho, uint64_t shots, uint64_t seed);

/// W(q,p) = Σ_b probs[b][M(b)] - 1. MixedParameters if dims differ.
WignerTable wigner_from_probs(const MeasurementRecord &rec, const PhaseParam &c);

/// inverse_wwt(wigner_from_probs(rec, c)).
DensityMatrix reconstruct(const MeasurementRecord &rec, const PhaseParam &c);

struct ReconstructionDiagnostics {
    Complex trace;
    double hermiticity_residue;
    double min_eigenvalue;
};

ReconstructionDiagnostics diagnose(const ComplexMatrix &m);

}  // namespace dwwt

#endif
