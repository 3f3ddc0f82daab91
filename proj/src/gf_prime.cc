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

#include "dwwt/gf_prime.h"

#include "dwwt/error.h"

namespace dwwt {

bool is_odd_prime(int64_t n) {
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    for (int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

void check_dimension(int64_t n) {
    if (n == 2) {
        throw Error(ErrorCode::UnsupportedDimension, "dimension 2 is not supported (no inverse of 2 mod 2)");
    }
    if (!is_odd_prime(n)) {
        throw Error(ErrorCode::CompositeDimension, "dimension " + std::to_string(n) + " is not prime");
    }
}

GfElement::GfElement(int64_t v, int64_t modulus) : value_(0), modulus_(modulus) {
    check_dimension(modulus);
    int64_t r = v % modulus;
    if (r < 0) {
        r += modulus;
    }
    value_ = r;
}

void GfElement::require_same_modulus(const GfElement &other) const {
    if (modulus_ != other.modulus_) {
        throw Error(
            ErrorCode::ModulusMismatch,
            "Mod[" + std::to_string(modulus_) + "] vs Mod[" + std::to_string(other.modulus_) + "]");
    }
}

GfElement GfElement::operator+(const GfElement &other) const {
    require_same_modulus(other);
    int64_t s = value_ + other.value_;
    if (s >= modulus_) {
        s -= modulus_;
    }
    return GfElement(Unchecked{}, s, modulus_);
}

GfElement GfElement::operator-(const GfElement &other) const {
    require_same_modulus(other);
    int64_t s = value_ - other.value_;
    if (s < 0) {
        s += modulus_;
    }
    return GfElement(Unchecked{}, s, modulus_);
}

GfElement GfElement::operator*(const GfElement &other) const {
    require_same_modulus(other);
    return GfElement(Unchecked{}, (value_ * other.value_) % modulus_, modulus_);
}

GfElement GfElement::operator-() const {
    return GfElement(Unchecked{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

GfElement &GfElement::operator+=(const GfElement &other) {
    return *this = *this + other;
}
GfElement &GfElement::operator-=(const GfElement &other) {
    return *this = *this - other;
}
GfElement &GfElement::operator*=(const GfElement &other) {
    return *this = *this * other;
}

GfElement GfElement::inverse() const {
    if (value_ == 0) {
        throw Error(ErrorCode::ZeroInverse, "0 has no inverse in Mod[" + std::to_string(modulus_) + "]");
    }
    // Extended Euclid on (value, modulus).
    int64_t r0 = modulus_, r1 = value_;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t quot = r0 / r1;
        int64_t r2 = r0 - quot * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - quot * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) {
        t0 += modulus_;
    }
    return GfElement(Unchecked{}, t0, modulus_);
}

std::string GfElement::str() const {
    return std::to_string(value_);
}

GfElement gf_make(int64_t v, int64_t modulus) {
    return GfElement(v, modulus);
}
GfElement gf_add(const GfElement &a, const GfElement &b) {
    return a + b;
}
GfElement gf_sub(const GfElement &a, const GfElement &b) {
    return a - b;
}
GfElement gf_mul(const GfElement &a, const GfElement &b) {
    return a * b;
}
GfElement gf_neg(const GfElement &a) {
    return -a;
}
GfElement gf_inv(const GfElement &a) {
    return a.inverse();
}

GfElement gf_half(int64_t modulus) {
    check_dimension(modulus);
    return GfElement((modulus + 1) / 2, modulus);
}

}  // namespace dwwt
