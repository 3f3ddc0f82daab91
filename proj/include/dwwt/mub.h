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

#ifndef DWWT_MUB_H
#define DWWT_MUB_H

#include <optional>
#include <string>
#include <vector>

#include "dwwt/gf_prime.h"
#include "dwwt/linalg.h"
#include "dwwt/schwinger.h"

namespace dwwt {

/// One of the N+1 mutually unbiased bases: the reference (Z eigen-) basis,
/// written "ddot0", or the eigenbasis of X Z^b for a slope b in Mod[N].
///
/// Labels order as ddot0, 0, 1, ..., N-1; `index()` gives that position.
class BasisLabel {
   public:
    static BasisLabel reference(int64_t modulus);
    static BasisLabel xz(GfElement slope);
    static BasisLabel from_index(size_t index, int64_t modulus);
    /// Accepts "ddot0" or an integer in [0, N-1]; UnknownBasisLabel otherwise.
    static BasisLabel parse(const std::string &text, int64_t modulus);
    /// All N+1 labels in serialization order.
    static std::vector<BasisLabel> all(int64_t modulus);

    bool is_reference() const noexcept {
        return !slope_.has_value();
    }
    /// WrongBasisKind for the reference label.
    GfElement slope() const;
    int64_t modulus() const noexcept {
        return modulus_;
    }
    size_t index() const noexcept {
        return slope_ ? static_cast<size_t>(slope_->value()) + 1 : 0;
    }
    std::string str() const;

    bool operator==(const BasisLabel &other) const noexcept = default;

   private:
    BasisLabel(int64_t modulus, std::optional<GfElement> slope) : modulus_(modulus), slope_(slope) {
    }

    int64_t modulus_;
    std::optional<GfElement> slope_;
};

struct MubState {
    BasisLabel basis;
    GfElement m;
    ComplexVector ket;
};

/// Builds |m;b> directly. For slope b the amplitudes are
/// ω^{b·q(q-1)/2 - q·m} / √N; for the reference basis the ket is e_m.
MubState build_mub_state(GfElement m, const BasisLabel &basis);

/// All (N+1)·N states for one dimension, indexed [basis.index()][m].
struct MubTable {
    int64_t dim;
    std::vector<std::vector<MubState>> states;

    const MubState &at(const BasisLabel &basis, const GfElement &m) const;
    const MubState &at(size_t basis_index, size_t m) const {
        return states[basis_index][m];
    }
};

/// Process-wide table for dimension N, built on first use. Safe for
/// concurrent callers; the returned reference stays valid for the program
/// lifetime.
const MubTable &mub_table(int64_t n);

/// Cached lookup of |m;b>.
const MubState &mub_state(const GfElement &m, const BasisLabel &basis);

/// |<s1|s2>|^2
double overlap_magnitude_sq(const MubState &s1, const MubState &s2);

/// ‖X Z^b |m;b> - ω^m |m;b>‖. WrongBasisKind for the reference basis.
double eigen_check(const MubState &state, const SchwingerPair &pair);

}  // namespace dwwt

#endif
