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

#include "dwwt/random_matrices.h"

namespace dwwt {

double MatrixSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0;
}

ComplexMatrix MatrixSampler::hermitian(size_t n) {
    ComplexMatrix g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            double re = uniform();
            double im = uniform();
            g(i, j) = Complex(re, im);
        }
    }
    return hermitian_part(g);
}

DensityMatrix MatrixSampler::density(size_t n) {
    ComplexMatrix g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            double re = uniform();
            double im = uniform();
            g(i, j) = Complex(re, im);
        }
    }
    ComplexMatrix rho = mat_mul(g, adjoint(g));
    rho = hermitian_part(rho);
    rho *= 1.0 / trace(rho).real();
    return DensityMatrix(std::move(rho));
}

DensityMatrix MatrixSampler::pure_state(size_t n) {
    ComplexVector psi(n);
    for (size_t i = 0; i < n; i++) {
        double re = uniform();
        double im = uniform();
        psi[i] = Complex(re, im);
    }
    psi = vec_scale(psi, 1.0 / psi.norm());
    ComplexMatrix rho = outer_product(psi, psi);
    rho = hermitian_part(rho);
    return DensityMatrix(std::move(rho));
}

}  // namespace dwwt
