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

#ifndef DWWT_LINALG_H
#define DWWT_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dwwt {

using Complex = std::complex<double>;

/// Default per-entry absolute tolerance for approximate comparisons.
inline constexpr double kDefaultTol = 1e-10;

/// ω^k with ω = exp(2πi/N). `k` is reduced Mod[N] before the angle is formed.
Complex root_of_unity(int64_t k, int64_t n);

class ComplexVector {
   public:
    explicit ComplexVector(size_t dim) : entries_(dim) {
    }
    explicit ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    }

    static ComplexVector basis(size_t dim, size_t index);

    size_t dim() const noexcept {
        return entries_.size();
    }
    Complex &operator[](size_t i) {
        return entries_[i];
    }
    const Complex &operator[](size_t i) const {
        return entries_[i];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    double norm() const;

    bool operator==(const ComplexVector &) const = default;

   private:
    std::vector<Complex> entries_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const ComplexVector &a, const ComplexVector &b);
ComplexVector vec_sub(const ComplexVector &a, const ComplexVector &b);
ComplexVector vec_scale(const ComplexVector &a, Complex s);

/// Dense square complex matrix, row-major.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    }

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix zero(size_t dim) {
        return ComplexMatrix(dim);
    }

    size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex s);

    bool operator==(const ComplexMatrix &) const = default;

   private:
    size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix mat_add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix mat_sub(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix mat_scale(const ComplexMatrix &a, Complex s);
ComplexVector mat_vec(const ComplexMatrix &a, const ComplexVector &v);
ComplexMatrix adjoint(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);
/// Tr(a·b) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);
/// |u><v|
ComplexMatrix outer_product(const ComplexVector &u, const ComplexVector &v);
ComplexMatrix identity(size_t dim);

/// Entrywise max |a_ij - b_ij|. DimensionMismatch if shapes differ.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool approx_eq(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kDefaultTol);

/// max |a_ij - conj(a_ji)|
double hermiticity_residue(const ComplexMatrix &a);
bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTol);
/// max |(a†a - I)_ij|
double unitarity_residue(const ComplexMatrix &a);
bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTol);

/// (a + a†) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &a);

/// Ascending eigenvalues of a Hermitian matrix. Only the Hermitian part of
/// `a` is used.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

/// (1/2) Σ |λ_i(a - b)| for Hermitian a, b.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace dwwt

#endif
