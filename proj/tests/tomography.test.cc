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

#include "dwwt/error.h"
#include "dwwt/random_matrices.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace dwwt;

namespace {

DensityMatrix basis_state(size_t n, size_t k) {
    ComplexVector e = ComplexVector::basis(n, k);
    return DensityMatrix(outer_product(e, e));
}

double max_record_diff(const MeasurementRecord &a, const MeasurementRecord &b) {
    double m = 0;
    for (size_t i = 0; i < a.probs.size(); i++) {
        for (size_t j = 0; j < a.probs[i].size(); j++) {
            m = std::max(m, std::abs(a.probs[i][j] - b.probs[i][j]));
        }
    }
    return m;
}

}  // namespace

TEST(tomography, density_matrix_validation) {
    EXPECT_NO_THROW(DensityMatrix(mat_scale(identity(3), 1.0 / 3.0)));
    try {
        DensityMatrix(identity(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidDensityMatrix);
    }
    ComplexMatrix skew = mat_scale(identity(3), 1.0 / 3.0);
    skew(0, 1) = Complex(0, 0.1);
    EXPECT_THROW(DensityMatrix{skew}, Error);
}

TEST(tomography, simulate_examples) {
    MeasurementRecord mixed = simulate_probs(DensityMatrix(mat_scale(identity(5), 0.2)));
    ASSERT_EQ(mixed.probs.size(), 6u);
    for (const auto &row : mixed.probs) {
        for (double v : row) {
            EXPECT_NEAR(v, 0.2, 1e-12);
        }
    }
    EXPECT_FALSE(mixed.sample_count.has_value());

    MeasurementRecord rec = simulate_probs(basis_state(5, 2));
    for (int64_t m = 0; m < 5; m++) {
        EXPECT_NEAR(rec.at(BasisLabel::reference(5))[m], m == 2 ? 1.0 : 0.0, 1e-12);
    }
    for (int64_t b = 0; b < 5; b++) {
        for (double v : rec.at(BasisLabel::xz(GfElement(b, 5)))) {
            EXPECT_NEAR(v, 0.2, 1e-12);
        }
    }
    EXPECT_NO_THROW(rec.validate());
}

TEST(tomography, record_validation) {
    MeasurementRecord rec = simulate_probs(basis_state(3, 0));
    rec.probs[1][0] += 0.01;
    EXPECT_THROW(rec.validate(), Error);
    rec = simulate_probs(basis_state(3, 0));
    rec.probs.pop_back();
    try {
        rec.validate();
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidRecord);
    }
}

TEST(tomography, sampling_deterministic) {
    MatrixSampler s(3);
    DensityMatrix rho = s.density(5);
    MeasurementRecord a = sample_probs(rho, 1000, 42);
    MeasurementRecord b = sample_probs(rho, 1000, 42);
    MeasurementRecord c = sample_probs(rho, 1000, 43);
    EXPECT_EQ(a.probs, b.probs);
    EXPECT_NE(a.probs, c.probs);
    EXPECT_EQ(a.sample_count, std::optional<uint64_t>(1000));
    EXPECT_NO_THROW(a.validate());

    MeasurementRecord one = sample_probs(rho, 1, 7);
    for (const auto &row : one.probs) {
        int ones = 0;
        for (double v : row) {
            EXPECT_TRUE(v == 0.0 || v == 1.0);
            ones += v == 1.0;
        }
        EXPECT_EQ(ones, 1);
    }

    try {
        sample_probs(rho, 0, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(tomography, sampling_converges) {
    MatrixSampler s(11);
    DensityMatrix rho = s.density(5);
    EXPECT_LE(max_record_diff(sample_probs(rho, 1000000, 2026), simulate_probs(rho)), 5e-3);
}

TEST(tomography, wigner_from_probs) {
    MatrixSampler s(12);
    for (int64_t n : {3, 5, 7}) {
        for (const auto &c : {PhaseParam::from_integer(0, n), PhaseParam::minus_half(n), PhaseParam::from_integer(1, n)}) {
            DensityMatrix rho = s.density(static_cast<size_t>(n));
            WignerTable direct = wwt_trace(rho.matrix(), c);
            WignerTable from_probs = wigner_from_probs(simulate_probs(rho), c);
            for (size_t i = 0; i < direct.values().size(); i++) {
                EXPECT_NEAR(direct.values()[i], from_probs.values()[i], 1e-10);
            }
            // Summing back along lines recovers the record.
            MeasurementRecord rec = simulate_probs(rho);
            for (const auto &label : BasisLabel::all(n)) {
                auto marginal = radon(from_probs, label);
                for (int64_t m = 0; m < n; m++) {
                    EXPECT_NEAR(marginal[m], rec.at(label)[m], 1e-10);
                }
            }
        }
    }
    MeasurementRecord rec5 = simulate_probs(basis_state(5, 0));
    try {
        wigner_from_probs(rec5, PhaseParam::from_integer(0, 7));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedParameters);
    }
}

TEST(tomography, reconstruct_round_trip) {
    MatrixSampler s(13);
    for (int64_t n : {3, 5, 7}) {
        for (const auto &c : {PhaseParam::from_integer(0, n), PhaseParam::minus_half(n)}) {
            for (int trial = 0; trial < 3; trial++) {
                DensityMatrix rho = trial == 0 ? s.pure_state(static_cast<size_t>(n)) : s.density(static_cast<size_t>(n));
                DensityMatrix back = reconstruct(simulate_probs(rho), c);
                EXPECT_LE(max_abs_diff(back.matrix(), rho.matrix()), 1e-9);
            }
        }
    }
}

TEST(tomography, reconstruction_independent_of_c) {
    MatrixSampler s(14);
    DensityMatrix rho = s.density(5);
    MeasurementRecord rec = sample_probs(rho, 2000, 5);
    DensityMatrix a = reconstruct(rec, PhaseParam::from_integer(0, 5));
    DensityMatrix b = reconstruct(rec, PhaseParam::minus_half(5));
    EXPECT_LE(max_abs_diff(a.matrix(), b.matrix()), 1e-12);
    EXPECT_GT(trace_distance(a.matrix(), rho.matrix()), 0.0);
}

TEST(tomography, error_decreases_with_shots) {
    MatrixSampler s(15);
    DensityMatrix rho = s.density(5);
    PhaseParam c = PhaseParam::minus_half(5);
    WignerTable exact = wwt_trace(rho.matrix(), c);
    double prev_td = 1e9;
    double prev_w = 1e9;
    for (uint64_t shots : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
        MeasurementRecord rec = sample_probs(rho, shots, 2026);
        DensityMatrix back = reconstruct(rec, c);
        double td = trace_distance(back.matrix(), rho.matrix());
        WignerTable w = wigner_from_probs(rec, c);
        double werr = 0;
        for (size_t i = 0; i < w.values().size(); i++) {
            werr = std::max(werr, std::abs(w.values()[i] - exact.values()[i]));
        }
        EXPECT_LT(td, prev_td) << shots;
        EXPECT_LT(werr, prev_w) << shots;
        prev_td = td;
        prev_w = werr;
    }
}

TEST(tomography, diagnostics) {
    MatrixSampler s(16);
    DensityMatrix rho = s.pure_state(5);
    ReconstructionDiagnostics d = diagnose(rho.matrix());
    EXPECT_NEAR(d.trace.real(), 1.0, 1e-12);
    EXPECT_NEAR(d.trace.imag(), 0.0, 1e-12);
    EXPECT_LE(d.hermiticity_residue, 1e-12);
    EXPECT_NEAR(d.min_eigenvalue, 0.0, 1e-10);

    DensityMatrix noisy = reconstruct(sample_probs(rho, 100, 1), PhaseParam::from_integer(0, 5));
    EXPECT_LT(diagnose(noisy.matrix()).min_eigenvalue, 0.0);
}
