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

#include "dwwt/wigner.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "dwwt/error.h"
#include "dwwt/schwinger.h"

namespace dwwt {

namespace {

void require_dim(const ComplexMatrix &a, const PhaseParam &c) {
    if (a.dim() != static_cast<size_t>(c.modulus())) {
        throw Error(
            ErrorCode::DimensionMismatch,
            "operator is " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " but N = " +
                std::to_string(c.modulus()));
    }
}

void require_same_point_dim(const PhasePoint &point, const PhaseParam &c) {
    if (point.modulus() != c.modulus() || point.p.modulus() != c.modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "phase point and phase parameter use different dimensions");
    }
}

double max_abs_entry(const ComplexMatrix &a) {
    double m = 0;
    for (const auto &z : a.entries()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

/// Projects complex traces onto reals, refusing when any imaginary part is
/// above tolerance.
WignerTable to_table(const std::vector<Complex> &raw, const PhaseParam &c, double tol) {
    std::vector<double> values(raw.size());
    double residue = 0;
    for (size_t i = 0; i < raw.size(); i++) {
        values[i] = raw[i].real();
        residue = std::max(residue, std::abs(raw[i].imag()));
    }
    if (residue > tol) {
        throw Error(
            ErrorCode::NonHermitianInput,
            "transform has imaginary residue " + std::to_string(residue) + " (operator not Hermitian)");
    }
    return WignerTable(c, std::move(values), residue);
}

double scaled_tol(const ComplexMatrix &a, double tol) {
    return tol * std::max(1.0, max_abs_entry(a));
}

}  // namespace

LineOperator line_operator_mub(const PhasePoint &point, const PhaseParam &c) {
    require_same_point_dim(point, c);
    int64_t n = c.modulus();
    const MubTable &table = mub_table(n);
    ComplexMatrix m = mat_scale(identity(static_cast<size_t>(n)), -1.0);
    for (const auto &label : BasisLabel::all(n)) {
        const MubState &s = table.at(label, line_value(point, c, label));
        m += outer_product(s.ket, s.ket);
    }
    return LineOperator{point, c, std::move(m)};
}

LineOperator line_operator_closed(const PhasePoint &point, const PhaseParam &c) {
    require_same_point_dim(point, c);
    int64_t n = c.modulus();
    GfElement half = gf_half(n);
    GfElement one = GfElement::one(n);
    GfElement two = one + one;
    // n + n' on the secondary diagonal, and the diagonal index removed from it.
    GfElement diag_sum = two * point.q + two * c.value() + one;
    GfElement removed = point.q + c.value() + half;
    int64_t q = point.q.value();
    int64_t p = point.p.value();

    ComplexMatrix m(static_cast<size_t>(n));
    for (int64_t row = 0; row < n; row++) {
        for (int64_t col = 0; col < n; col++) {
            Complex v = 0;
            if (row == q && col == q) {
                v += 1.0;
            }
            if (row == col && row == removed.value()) {
                v -= 1.0;
            }
            if ((row + col) % n == diag_sum.value()) {
                v += root_of_unity((row - col) * p, n);
            }
            m(static_cast<size_t>(row), static_cast<size_t>(col)) = v;
        }
    }
    return LineOperator{point, c, std::move(m)};
}

const LineOperatorSet &line_operators(const PhaseParam &c) {
    static std::mutex mu;
    static std::map<std::pair<int64_t, int64_t>, std::unique_ptr<const LineOperatorSet>> cache;
    int64_t n = c.modulus();
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{n, c.value().value()}];
    if (!slot) {
        auto set = std::make_unique<LineOperatorSet>(LineOperatorSet{c, static_cast<size_t>(n), {}});
        set->ops.reserve(static_cast<size_t>(n * n));
        for (int64_t q = 0; q < n; q++) {
            for (int64_t p = 0; p < n; p++) {
                set->ops.push_back(line_operator_closed(PhasePoint::make(q, p, n), c).matrix);
            }
        }
        slot = std::move(set);
    }
    return *slot;
}

WignerTable::WignerTable(PhaseParam c, std::vector<double> values, double max_imag_residue)
    : c_(std::move(c)),
      dim_(static_cast<size_t>(c_.modulus())),
      values_(std::move(values)),
      max_imag_residue_(max_imag_residue) {
    if (values_.size() != dim_ * dim_) {
        throw Error(
            ErrorCode::DimensionMismatch,
            "Wigner table needs " + std::to_string(dim_ * dim_) + " values, got " + std::to_string(values_.size()));
    }
}

double WignerTable::normalization() const {
    double s = 0;
    for (double v : values_) {
        s += v;
    }
    return s / static_cast<double>(dim_);
}

WignerTable wwt_trace(const ComplexMatrix &a, const PhaseParam &c, double imag_tol) {
    require_dim(a, c);
    const LineOperatorSet &ops = line_operators(c);
    std::vector<Complex> raw;
    raw.reserve(ops.ops.size());
    for (const auto &p : ops.ops) {
        raw.push_back(trace_of_product(a, p));
    }
    return to_table(raw, c, scaled_tol(a, imag_tol));
}

WignerTable wwt_schwinger(const ComplexMatrix &a, const PhaseParam &c, double imag_tol) {
    require_dim(a, c);
    int64_t n = c.modulus();
    size_t d = static_cast<size_t>(n);
    SchwingerPair pair = build_schwinger(n);

    // slope_traces[b][k] = Tr(A [(X Z^b)^k]†), clock_traces[k] = Tr(A (Z^k)†).
    std::vector<std::vector<Complex>> slope_traces(d, std::vector<Complex>(d));
    std::vector<Complex> clock_traces(d);
    for (int64_t b = 0; b < n; b++) {
        ComplexMatrix u = pair.xz_power(b);
        for (int64_t k = 1; k < n; k++) {
            slope_traces[b][k] = trace_of_product(a, adjoint(op_power(u, k)));
        }
    }
    for (int64_t k = 0; k < n; k++) {
        clock_traces[k] = trace_of_product(a, adjoint(op_power(pair.z, k)));
    }

    int64_t cv = c.value().value();
    std::vector<Complex> raw(d * d);
    for (int64_t q = 0; q < n; q++) {
        for (int64_t p = 0; p < n; p++) {
            Complex s = 0;
            for (int64_t b = 0; b < n; b++) {
                int64_t line_m = ((-p + b * (q + cv)) % n + n) % n;
                for (int64_t k = 1; k < n; k++) {
                    s += slope_traces[b][k] * root_of_unity(k * line_m, n);
                }
            }
            for (int64_t k = 0; k < n; k++) {
                s += clock_traces[k] * root_of_unity(k * q, n);
            }
            raw[static_cast<size_t>(q * n + p)] = s / static_cast<double>(n);
        }
    }
    return to_table(raw, c, scaled_tol(a, imag_tol));
}

WignerTable wwt_mub(const ComplexMatrix &a, const PhaseParam &c, double imag_tol) {
    require_dim(a, c);
    int64_t n = c.modulus();
    const MubTable &table = mub_table(n);
    std::vector<BasisLabel> labels = BasisLabel::all(n);

    // expectations[b][m] = <m;b|A|m;b>
    std::vector<std::vector<Complex>> expectations;
    for (const auto &label : labels) {
        std::vector<Complex> row;
        for (int64_t m = 0; m < n; m++) {
            const ComplexVector &ket = table.at(label.index(), static_cast<size_t>(m)).ket;
            row.push_back(inner_product(ket, mat_vec(a, ket)));
        }
        expectations.push_back(std::move(row));
    }
    Complex tr = trace(a);

    std::vector<Complex> raw;
    raw.reserve(static_cast<size_t>(n * n));
    for (int64_t q = 0; q < n; q++) {
        for (int64_t p = 0; p < n; p++) {
            PhasePoint point = PhasePoint::make(q, p, n);
            Complex s = 0;
            for (const auto &label : labels) {
                s += expectations[label.index()][static_cast<size_t>(line_value(point, c, label).value())];
            }
            raw.push_back(s - tr);
        }
    }
    return to_table(raw, c, scaled_tol(a, imag_tol));
}

ComplexMatrix inverse_wwt(const WignerTable &w) {
    const LineOperatorSet &ops = line_operators(w.param());
    size_t d = w.dim();
    ComplexMatrix out(d);
    for (size_t q = 0; q < d; q++) {
        for (size_t p = 0; p < d; p++) {
            out += mat_scale(ops.at(q, p), w(q, p));
        }
    }
    out *= 1.0 / static_cast<double>(d);
    return out;
}

double overlap(const WignerTable &wa, const WignerTable &wb) {
    if (wa.dim() != wb.dim() || !(wa.param() == wb.param())) {
        throw Error(ErrorCode::MixedParameters, "tables belong to different (N, c)");
    }
    double s = 0;
    for (size_t i = 0; i < wa.values().size(); i++) {
        s += wa.values()[i] * wb.values()[i];
    }
    return s / static_cast<double>(wa.dim());
}

std::vector<double> radon(const WignerTable &w, const BasisLabel &basis) {
    int64_t n = w.param().modulus();
    if (basis.modulus() != n) {
        throw Error(ErrorCode::ModulusMismatch, "basis label from a different dimension");
    }
    std::vector<double> out(w.dim(), 0.0);
    for (int64_t q = 0; q < n; q++) {
        for (int64_t p = 0; p < n; p++) {
            GfElement m = line_value(PhasePoint::make(q, p, n), w.param(), basis);
            out[static_cast<size_t>(m.value())] += w(static_cast<size_t>(q), static_cast<size_t>(p));
        }
    }
    for (double &v : out) {
        v /= static_cast<double>(n);
    }
    return out;
}

ComplexMatrix parity_op(const PhasePoint &point) {
    int64_t n = point.modulus();
    size_t d = static_cast<size_t>(n);
    SchwingerPair pair = build_schwinger(n);
    ComplexMatrix reflection(d);
    for (size_t k = 0; k < d; k++) {
        reflection(k, (d - k) % d) = 1.0;
    }
    int64_t q = point.q.value();
    int64_t p = point.p.value();
    ComplexMatrix displacement = mat_mul(op_power(pair.x, q), op_power(pair.z, p));
    return mat_mul(mat_mul(displacement, reflection), adjoint(displacement));
}

}  // namespace dwwt
