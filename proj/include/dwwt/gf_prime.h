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

#ifndef DWWT_GF_PRIME_H
#define DWWT_GF_PRIME_H

#include <cstdint>
#include <string>

namespace dwwt {

/// Throws CompositeDimension for non-primes (including 0 and 1) and
/// UnsupportedDimension for N = 2.
void check_dimension(int64_t n);

bool is_odd_prime(int64_t n);

/// Residue of the prime field Mod[N], N an odd prime.
///
/// Phase-space coordinates, basis slopes, MUB indices and the reduced phase
/// parameter all live here. Arithmetic between elements of different moduli
/// throws ModulusMismatch.
class GfElement {
   public:
    /// Reduces `v` into [0, N-1] with Euclidean remainder. Validates N.
    GfElement(int64_t v, int64_t modulus);

    static GfElement zero(int64_t modulus) {
        return GfElement(0, modulus);
    }
    static GfElement one(int64_t modulus) {
        return GfElement(1, modulus);
    }

    int64_t value() const noexcept {
        return value_;
    }
    int64_t modulus() const noexcept {
        return modulus_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }

    GfElement operator+(const GfElement &other) const;
    GfElement operator-(const GfElement &other) const;
    GfElement operator*(const GfElement &other) const;
    GfElement operator-() const;
    GfElement &operator+=(const GfElement &other);
    GfElement &operator-=(const GfElement &other);
    GfElement &operator*=(const GfElement &other);

    /// Multiplicative inverse; ZeroInverse for 0.
    GfElement inverse() const;

    bool operator==(const GfElement &other) const noexcept = default;

    std::string str() const;

   private:
    struct Unchecked {};
    GfElement(Unchecked, int64_t v, int64_t modulus) noexcept : value_(v), modulus_(modulus) {
    }
    void require_same_modulus(const GfElement &other) const;

    int64_t value_;
    int64_t modulus_;
};

GfElement gf_make(int64_t v, int64_t modulus);
GfElement gf_add(const GfElement &a, const GfElement &b);
GfElement gf_sub(const GfElement &a, const GfElement &b);
GfElement gf_mul(const GfElement &a, const GfElement &b);
GfElement gf_neg(const GfElement &a);
GfElement gf_inv(const GfElement &a);

/// 2^{-1} in Mod[N], i.e. (N + 1) / 2.
GfElement gf_half(int64_t modulus);

}  // namespace dwwt

#endif
