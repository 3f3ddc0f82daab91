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

#ifndef DWWT_LINES_H
#define DWWT_LINES_H

#include <string>
#include <utility>
#include <vector>

#include "dwwt/gf_prime.h"
#include "dwwt/mub.h"

namespace dwwt {

/// The family parameter c, embedded in Mod[N].
///
/// c is given as a rational a/b and embedded as a·b^{-1}. Denominators 1 and
/// 2 cover the members discussed in the literature (c = 0, c = -1/2, ...);
/// any other denominator coprime to N is accepted as an extension.
class PhaseParam {
   public:
    static PhaseParam from_rational(int64_t numerator, int64_t denominator, int64_t modulus);
    static PhaseParam from_integer(int64_t value, int64_t modulus) {
        return from_rational(value, 1, modulus);
    }
    /// c = -1/2, the member whose line operators are displaced parities.
    static PhaseParam minus_half(int64_t modulus) {
        return from_rational(-1, 2, modulus);
    }
    /// Parses "a" or "a/b" (optional sign). InvalidPhaseParam on malformed
    /// text or a denominator divisible by N.
    static PhaseParam parse(const std::string &text, int64_t modulus);

    const GfElement &value() const noexcept {
        return value_;
    }
    int64_t modulus() const noexcept {
        return value_.modulus();
    }
    /// Reduced rational form, e.g. "0", "-1/2", "3/2".
    const std::string &display() const noexcept {
        return display_;
    }
    bool is_minus_half() const;

    /// Two parameters are the same transform iff their field values agree.
    bool operator==(const PhaseParam &other) const noexcept {
        return value_ == other.value_;
    }

   private:
    PhaseParam(GfElement value, std::string display) : value_(value), display_(std::move(display)) {
    }

    GfElement value_;
    std::string display_;
};

struct PhasePoint {
    GfElement q;
    GfElement p;

    static PhasePoint make(int64_t q, int64_t p, int64_t modulus) {
        return PhasePoint{GfElement(q, modulus), GfElement(p, modulus)};
    }
    int64_t modulus() const noexcept {
        return q.modulus();
    }
    bool operator==(const PhasePoint &) const noexcept = default;
};

/// For fixed (q, p, c): the map b -> M(b) over all N+1 basis labels, with
///   M(ddot0) = q,   M(b) = -p + b(q + c)  Mod[N].
class Line {
   public:
    Line(PhasePoint point, PhaseParam c, std::vector<GfElement> values)
        : point_(point), c_(std::move(c)), values_(std::move(values)) {
    }

    const PhasePoint &point() const noexcept {
        return point_;
    }
    const PhaseParam &param() const noexcept {
        return c_;
    }
    int64_t modulus() const noexcept {
        return point_.modulus();
    }
    const GfElement &at(const BasisLabel &basis) const;
    const GfElement &at_index(size_t basis_index) const {
        return values_[basis_index];
    }
    /// Values in serialization order (ddot0 first).
    const std::vector<GfElement> &values() const noexcept {
        return values_;
    }
    bool contains(const BasisLabel &basis, const GfElement &m) const {
        return at(basis) == m;
    }

    /// Structural: same dimension and same point set.
    bool operator==(const Line &other) const noexcept {
        return values_ == other.values_;
    }

   private:
    PhasePoint point_;
    PhaseParam c_;
    std::vector<GfElement> values_;
};

/// M(b) at a single label.
GfElement line_value(const PhasePoint &point, const PhaseParam &c, const BasisLabel &basis);

Line line_points(const PhasePoint &point, const PhaseParam &c);

/// The unique point shared by two distinct lines of the same (N, c).
/// IdenticalLines if both share (q, p); MixedParameters if N or c differ.
std::pair<BasisLabel, GfElement> line_intersection(const Line &l1, const Line &l2);

/// All N^2 lines, q-major then p ascending.
std::vector<Line> enumerate_lines(const PhaseParam &c);

}  // namespace dwwt

#endif
