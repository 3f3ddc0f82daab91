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

#include "dwwt/lines.h"

#include <charconv>
#include <numeric>

#include "dwwt/error.h"

namespace dwwt {

namespace {

bool parse_int(std::string_view text, int64_t &out) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

PhaseParam PhaseParam::from_rational(int64_t numerator, int64_t denominator, int64_t modulus) {
    check_dimension(modulus);
    if (denominator == 0 || denominator % modulus == 0) {
        throw Error(
            ErrorCode::InvalidPhaseParam,
            "denominator " + std::to_string(denominator) + " is not invertible in Mod[" + std::to_string(modulus) +
                "]");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    int64_t g = std::gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    std::string display = std::to_string(numerator);
    if (denominator != 1) {
        display += "/" + std::to_string(denominator);
    }
    GfElement value = GfElement(numerator, modulus) * GfElement(denominator, modulus).inverse();
    return PhaseParam(value, std::move(display));
}

PhaseParam PhaseParam::parse(const std::string &text, int64_t modulus) {
    std::string_view view(text);
    int64_t numerator = 0;
    int64_t denominator = 1;
    auto slash = view.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_int(view, numerator)
                  : parse_int(view.substr(0, slash), numerator) && parse_int(view.substr(slash + 1), denominator);
    if (!ok) {
        throw Error(ErrorCode::InvalidPhaseParam, "cannot parse phase parameter '" + text + "'");
    }
    return from_rational(numerator, denominator, modulus);
}

bool PhaseParam::is_minus_half() const {
    return value_ == -gf_half(modulus());
}

const GfElement &Line::at(const BasisLabel &basis) const {
    if (basis.modulus() != modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "basis label from a different dimension");
    }
    return values_[basis.index()];
}

GfElement line_value(const PhasePoint &point, const PhaseParam &c, const BasisLabel &basis) {
    if (basis.is_reference()) {
        return point.q;
    }
    return -point.p + basis.slope() * (point.q + c.value());
}

Line line_points(const PhasePoint &point, const PhaseParam &c) {
    if (point.modulus() != c.modulus() || point.p.modulus() != c.modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "phase point and phase parameter use different dimensions");
    }
    std::vector<GfElement> values;
    values.reserve(static_cast<size_t>(point.modulus()) + 1);
    for (const auto &label : BasisLabel::all(point.modulus())) {
        values.push_back(line_value(point, c, label));
    }
    return Line(point, c, std::move(values));
}

std::pair<BasisLabel, GfElement> line_intersection(const Line &l1, const Line &l2) {
    if (l1.modulus() != l2.modulus() || !(l1.param() == l2.param())) {
        throw Error(ErrorCode::MixedParameters, "lines belong to different (N, c)");
    }
    const PhasePoint &a = l1.point();
    const PhasePoint &b = l2.point();
    if (a == b) {
        throw Error(ErrorCode::IdenticalLines, "a line has no single intersection with itself");
    }
    if (a.q == b.q) {
        return {BasisLabel::reference(l1.modulus()), a.q};
    }
    GfElement slope = (a.p - b.p) * (a.q - b.q).inverse();
    BasisLabel label = BasisLabel::xz(slope);
    return {label, l1.at(label)};
}

std::vector<Line> enumerate_lines(const PhaseParam &c) {
    int64_t n = c.modulus();
    std::vector<Line> out;
    out.reserve(static_cast<size_t>(n * n));
    for (int64_t q = 0; q < n; q++) {
        for (int64_t p = 0; p < n; p++) {
            out.push_back(line_points(PhasePoint::make(q, p, n), c));
        }
    }
    return out;
}

}  // namespace dwwt
