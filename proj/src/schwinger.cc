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

#include "dwwt/schwinger.h"

#include <cmath>

#include "dwwt/error.h"
#include "dwwt/gf_prime.h"

namespace dwwt {

SchwingerPair build_schwinger(int64_t n) {
    check_dimension(n);
    size_t d = static_cast<size_t>(n);
    ComplexMatrix z(d);
    ComplexMatrix x(d);
    for (size_t q = 0; q < d; q++) {
        z(q, q) = root_of_unity(static_cast<int64_t>(q), n);
        x((q + 1) % d, q) = 1.0;
    }
    return SchwingerPair{d, std::move(z), std::move(x)};
}

ComplexMatrix SchwingerPair::xz_power(int64_t b) const {
    return mat_mul(x, op_power(z, b));
}

ComplexMatrix op_power(const ComplexMatrix &u, int64_t k) {
    double residue = unitarity_residue(u);
    if (residue > kDefaultTol) {
        throw Error(ErrorCode::NonUnitaryInput, "unitarity residue " + std::to_string(residue));
    }
    ComplexMatrix base = k < 0 ? adjoint(u) : u;
    int64_t e = k < 0 ? -k : k;
    ComplexMatrix result = identity(u.dim());
    for (int64_t i = 0; i < e; i++) {
        result = mat_mul(result, base);
    }
    return result;
}

ComplexMatrix position_op(int64_t n) {
    check_dimension(n);
    size_t d = static_cast<size_t>(n);
    ComplexMatrix m(d);
    for (size_t q = 0; q < d; q++) {
        m(q, q) = static_cast<double>(q);
    }
    return m;
}

ComplexVector momentum_state(int64_t k, int64_t n) {
    check_dimension(n);
    size_t d = static_cast<size_t>(n);
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexVector v(d);
    for (size_t q = 0; q < d; q++) {
        v[q] = amp * root_of_unity((k % n) * static_cast<int64_t>(q), n);
    }
    return v;
}

ComplexMatrix momentum_op(int64_t n) {
    check_dimension(n);
    ComplexMatrix m(static_cast<size_t>(n));
    for (int64_t k = 1; k < n; k++) {
        ComplexVector s = momentum_state(k, n);
        m += mat_scale(outer_product(s, s), static_cast<double>(k));
    }
    return m;
}

ComplexMatrix momentum_exponential(int64_t n, int sign) {
    check_dimension(n);
    ComplexMatrix m(static_cast<size_t>(n));
    for (int64_t k = 0; k < n; k++) {
        ComplexVector s = momentum_state(k, n);
        m += mat_scale(outer_product(s, s), root_of_unity(sign * k, n));
    }
    return m;
}

}  // namespace dwwt
