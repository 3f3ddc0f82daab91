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

#include "dwwt/mub.h"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "dwwt/error.h"

namespace dwwt {

BasisLabel BasisLabel::reference(int64_t modulus) {
    check_dimension(modulus);
    return BasisLabel(modulus, std::nullopt);
}

BasisLabel BasisLabel::xz(GfElement slope) {
    return BasisLabel(slope.modulus(), slope);
}

BasisLabel BasisLabel::from_index(size_t index, int64_t modulus) {
    if (index == 0) {
        return reference(modulus);
    }
    if (index > static_cast<size_t>(modulus)) {
        throw Error(ErrorCode::UnknownBasisLabel, "basis index " + std::to_string(index) + " out of range");
    }
    return xz(GfElement(static_cast<int64_t>(index) - 1, modulus));
}

BasisLabel BasisLabel::parse(const std::string &text, int64_t modulus) {
    check_dimension(modulus);
    if (text == "ddot0") {
        return reference(modulus);
    }
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 0 || v >= modulus) {
        throw Error(ErrorCode::UnknownBasisLabel, "'" + text + "' is not ddot0 or a slope in [0, N-1]");
    }
    return xz(GfElement(v, modulus));
}

std::vector<BasisLabel> BasisLabel::all(int64_t modulus) {
    std::vector<BasisLabel> out;
    out.reserve(static_cast<size_t>(modulus) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(modulus); i++) {
        out.push_back(from_index(i, modulus));
    }
    return out;
}

GfElement BasisLabel::slope() const {
    if (!slope_) {
        throw Error(ErrorCode::WrongBasisKind, "the reference basis has no X Z^b slope");
    }
    return *slope_;
}

std::string BasisLabel::str() const {
    return slope_ ? slope_->str() : "ddot0";
}

MubState build_mub_state(GfElement m, const BasisLabel &basis) {
    int64_t n = m.modulus();
    if (basis.modulus() != n) {
        throw Error(ErrorCode::ModulusMismatch, "state index and basis label use different dimensions");
    }
    size_t d = static_cast<size_t>(n);
    if (basis.is_reference()) {
        return MubState{basis, m, ComplexVector::basis(d, static_cast<size_t>(m.value()))};
    }
    int64_t b = basis.slope().value();
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexVector ket(d);
    for (int64_t q = 0; q < n; q++) {
        // q(q-1) is even, so the half is exact before reduction.
        int64_t exponent = (b * ((q * (q - 1) / 2) % n) - q * m.value()) % n;
        ket[static_cast<size_t>(q)] = amp * root_of_unity(exponent, n);
    }
    return MubState{basis, m, std::move(ket)};
}

const MubState &MubTable::at(const BasisLabel &basis, const GfElement &m) const {
    if (basis.modulus() != dim || m.modulus() != dim) {
        throw Error(ErrorCode::ModulusMismatch, "lookup in MUB table of a different dimension");
    }
    return states[basis.index()][static_cast<size_t>(m.value())];
}

namespace {

std::unique_ptr<const MubTable> make_table(int64_t n) {
    auto table = std::make_unique<MubTable>();
    table->dim = n;
    for (const auto &label : BasisLabel::all(n)) {
        std::vector<MubState> row;
        row.reserve(static_cast<size_t>(n));
        for (int64_t m = 0; m < n; m++) {
            row.push_back(build_mub_state(GfElement(m, n), label));
        }
        table->states.push_back(std::move(row));
    }
    return table;
}

}  // namespace

const MubTable &mub_table(int64_t n) {
    check_dimension(n);
    static std::mutex mu;
    static std::map<int64_t, std::unique_ptr<const MubTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        slot = make_table(n);
    }
    return *slot;
}

const MubState &mub_state(const GfElement &m, const BasisLabel &basis) {
    return mub_table(m.modulus()).at(basis, m);
}

double overlap_magnitude_sq(const MubState &s1, const MubState &s2) {
    return std::norm(inner_product(s1.ket, s2.ket));
}

double eigen_check(const MubState &state, const SchwingerPair &pair) {
    if (state.ket.dim() != pair.dim) {
        throw Error(ErrorCode::DimensionMismatch, "state and Schwinger pair dimensions differ");
    }
    ComplexMatrix u = pair.xz_power(state.basis.slope().value());
    ComplexVector lhs = mat_vec(u, state.ket);
    ComplexVector rhs = vec_scale(state.ket, root_of_unity(state.m.value(), state.m.modulus()));
    return vec_sub(lhs, rhs).norm();
}

}  // namespace dwwt
