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

#ifndef DWWT_WIGNER_H
#define DWWT_WIGNER_H

#include <vector>

#include "dwwt/lines.h"
#include "dwwt/linalg.h"
#include "dwwt/mub.h"

namespace dwwt {

/// Phase-point operator P_{q,p}: the sum of the MUB projectors along the
/// line through (q, p) minus the identity. Hermitian with unit trace for
/// every c; at c = -1/2 it squares to the identity.
struct LineOperator {
    PhasePoint point;
    PhaseParam c;
    ComplexMatrix matrix;
};

/// Σ_b |M(b);b><M(b);b| - I, assembled from MUB projectors.
LineOperator line_operator_mub(const PhasePoint &point, const PhaseParam &c);

/// Closed-form matrix elements:
///   <n|P|n'> = δ(q,n)δ(q,n') - δ(n,n')δ(n, q+c+1/2) + δ(n+n', 2q+2c+1) ω^{(n-n')p}
/// with every delta compared in Mod[N].
LineOperator line_operator_closed(const PhasePoint &point, const PhaseParam &c);

/// All N^2 closed-form line operators for one (N, c), indexed q·N + p.
struct LineOperatorSet {
    PhaseParam c;
    size_t dim;
    std::vector<ComplexMatrix> ops;

    const ComplexMatrix &at(size_t q, size_t p) const {
        return ops[q * dim + p];
    }
};

/// Process-wide build-once cache keyed by (N, c).
const LineOperatorSet &line_operators(const PhaseParam &c);

/// Real N×N table W(q, p), row-major in q.
class WignerTable {
   public:
    WignerTable(PhaseParam c, std::vector<double> values, double max_imag_residue = 0.0);

    size_t dim() const noexcept {
        return dim_;
    }
    const PhaseParam &param() const noexcept {
        return c_;
    }
    double operator()(size_t q, size_t p) const {
        return values_[q * dim_ + p];
    }
    const std::vector<double> &values() const noexcept {
        return values_;
    }
    /// Largest |Im| discarded when the defining traces were projected to reals.
    double max_imag_residue() const noexcept {
        return max_imag_residue_;
    }

    /// (1/N) Σ W
    double normalization() const;

   private:
    PhaseParam c_;
    size_t dim_;
    std::vector<double> values_;
    double max_imag_residue_;
};

/// Tolerance on the imaginary part of each Tr(A·P), scaled by max(1, max|A_ij|).
inline constexpr double kImagTol = 1e-10;

/// W(q,p) = Tr(A P_{q,p}). The canonical route.
/// NonHermitianInput if any trace carries an imaginary part above tolerance;
/// no table is returned in that case.
WignerTable wwt_trace(const ComplexMatrix &a, const PhaseParam &c, double imag_tol = kImagTol);

/// Evaluates the double sum over the Schwinger powers (X Z^b)^k and Z^k
/// literally. Verification route.
WignerTable wwt_schwinger(const ComplexMatrix &a, const PhaseParam &c, double imag_tol = kImagTol);

/// W(q,p) = Σ_b <M(b);b|A|M(b);b> - Tr A. Verification route.
WignerTable wwt_mub(const ComplexMatrix &a, const PhaseParam &c, double imag_tol = kImagTol);

/// A = (1/N) Σ W(q,p) P_{q,p}
ComplexMatrix inverse_wwt(const WignerTable &w);

/// (1/N) Σ W_A W_B, which equals Tr(A B). MixedParameters if (N, c) differ.
double overlap(const WignerTable &wa, const WignerTable &wb);

/// out[m] = (1/N) Σ_{q,p : M(b) = m} W(q,p)
std::vector<double> radon(const WignerTable &w, const BasisLabel &basis);

/// Π_{q,p} = X^q Z^p Π_{0,0} Z^{-p} X^{-q} where Π_{0,0}|n> = |-n>.
ComplexMatrix parity_op(const PhasePoint &point);

}  // namespace dwwt

#endif
