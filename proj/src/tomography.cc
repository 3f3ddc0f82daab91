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

#include "dwwt/tomography.h"

#include <cmath>
#include <random>

#include "dwwt/error.h"

namespace dwwt {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64 &engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    double herm = hermiticity_residue(matrix_);
    if (herm > tol) {
        throw Error(ErrorCode::InvalidDensityMatrix, "not Hermitian (residue " + std::to_string(herm) + ")");
    }
    Complex tr = trace(matrix_);
    if (std::abs(tr - Complex(1.0)) > tol) {
        throw Error(
            ErrorCode::InvalidDensityMatrix,
            "trace is (" + std::to_string(tr.real()) + ", " + std::to_string(tr.imag()) + "), expected 1");
    }
}

void MeasurementRecord::validate(double tol) const {
    check_dimension(dim);
    size_t n = static_cast<size_t>(dim);
    if (probs.size() != n + 1) {
        throw Error(
            ErrorCode::InvalidRecord,
            "expected " + std::to_string(n + 1) + " bases, got " + std::to_string(probs.size()));
    }
    for (size_t b = 0; b < probs.size(); b++) {
        const auto &row = probs[b];
        if (row.size() != n) {
            throw Error(
                ErrorCode::InvalidRecord,
                "basis " + BasisLabel::from_index(b, dim).str() + " has " + std::to_string(row.size()) +
                    " probabilities, expected " + std::to_string(n));
        }
        double sum = 0;
        for (double v : row) {
            if (!std::isfinite(v) || v < -tol) {
                throw Error(ErrorCode::InvalidRecord, "negative or non-finite probability");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol) {
            throw Error(
                ErrorCode::InvalidRecord,
                "basis " + BasisLabel::from_index(b, dim).str() + " sums to " + std::to_string(sum));
        }
    }
}

MeasurementRecord simulate_probs(const DensityMatrix &rho) {
    int64_t n = static_cast<int64_t>(rho.dim());
    const MubTable &table = mub_table(n);
    MeasurementRecord rec{n, {}, std::nullopt};
    for (size_t b = 0; b <= rho.dim(); b++) {
        std::vector<double> row(rho.dim());
        for (size_t m = 0; m < rho.dim(); m++) {
            const ComplexVector &ket = table.at(b, m).ket;
            row[m] = inner_product(ket, mat_vec(rho.matrix(), ket)).real();
        }
        rec.probs.push_back(std::move(row));
    }
    return rec;
}

MeasurementRecord sample_probs(const DensityMatrix &rho, uint64_t shots, uint64_t seed) {
    if (shots < 1) {
        throw Error(ErrorCode::InvalidArgument, "shots must be at least 1");
    }
    MeasurementRecord exact = simulate_probs(rho);
    MeasurementRecord rec{exact.dim, {}, shots};
    for (size_t b = 0; b < exact.probs.size(); b++) {
        const auto &p = exact.probs[b];
        std::vector<double> cumulative(p.size());
        double run = 0;
        size_t last_positive = 0;
        for (size_t m = 0; m < p.size(); m++) {
            double v = std::max(0.0, p[m]);
            if (v > 0) {
                last_positive = m;
            }
            run += v;
            cumulative[m] = run;
        }
        std::mt19937_64 engine(splitmix64(seed + (b + 1) * 0x9E3779B97F4A7C15ULL));
        std::vector<uint64_t> counts(p.size(), 0);
        for (uint64_t s = 0; s < shots; s++) {
            double u = uniform01(engine) * run;
            size_t m = 0;
            while (m < last_positive && u >= cumulative[m]) {
                m++;
            }
            counts[m]++;
        }
        std::vector<double> freq(p.size());
        for (size_t m = 0; m < p.size(); m++) {
            freq[m] = static_cast<double>(counts[m]) / static_cast<double>(shots);
        }
        rec.probs.push_back(std::move(freq));
    }
    return rec;
}

WignerTable wigner_from_probs(const MeasurementRecord &rec, const PhaseParam &c) {
    if (rec.dim != c.modulus()) {
        throw Error(
            ErrorCode::MixedParameters,
            "record has N = " + std::to_string(rec.dim) + " but c lives in Mod[" + std::to_string(c.modulus()) + "]");
    }
    rec.validate(1e-6);
    int64_t n = rec.dim;
    std::vector<BasisLabel> labels = BasisLabel::all(n);
    std::vector<double> values;
    values.reserve(static_cast<size_t>(n * n));
    for (int64_t q = 0; q < n; q++) {
        for (int64_t p = 0; p < n; p++) {
            PhasePoint point = PhasePoint::make(q, p, n);
            double s = 0;
            for (const auto &label : labels) {
                s += rec.probs[label.index()][static_cast<size_t>(line_value(point, c, label).value())];
            }
            values.push_back(s - 1.0);
        }
    }
    return WignerTable(c, std::move(values));
}

DensityMatrix reconstruct(const MeasurementRecord &rec, const PhaseParam &c) {
    return DensityMatrix(inverse_wwt(wigner_from_probs(rec, c)), 1e-9);
}

ReconstructionDiagnostics diagnose(const ComplexMatrix &m) {
    return ReconstructionDiagnostics{trace(m), hermiticity_residue(m), hermitian_eigenvalues(m).front()};
}

}  // namespace dwwt
