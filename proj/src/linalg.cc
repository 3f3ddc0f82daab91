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

#include "dwwt/linalg.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dwwt/error.h"

namespace dwwt {

namespace {

void require_dim(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw Error(
            ErrorCode::DimensionMismatch, std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Complex root_of_unity(int64_t k, int64_t n) {
    int64_t r = k % n;
    if (r < 0) {
        r += n;
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

ComplexVector ComplexVector::basis(size_t dim, size_t index) {
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
}

double ComplexVector::norm() const {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

Complex inner_product(const ComplexVector &a, const ComplexVector &b) {
    require_dim(a.dim(), b.dim(), "inner_product");
    Complex s = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexVector vec_sub(const ComplexVector &a, const ComplexVector &b) {
    require_dim(a.dim(), b.dim(), "vec_sub");
    ComplexVector r(a.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        r[i] = a[i] - b[i];
    }
    return r;
}

ComplexVector vec_scale(const ComplexVector &a, Complex s) {
    ComplexVector r(a.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        r[i] = a[i] * s;
    }
    return r;
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_dim(dim_, other.dim_, "mat_add");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_dim(dim_, other.dim_, "mat_sub");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : entries_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_dim(a.dim(), b.dim(), "mat_mul");
    size_t n = a.dim();
    ComplexMatrix r(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix mat_add(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix r = a;
    r += b;
    return r;
}

ComplexMatrix mat_sub(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix r = a;
    r -= b;
    return r;
}

ComplexMatrix mat_scale(const ComplexMatrix &a, Complex s) {
    ComplexMatrix r = a;
    r *= s;
    return r;
}

ComplexVector mat_vec(const ComplexMatrix &a, const ComplexVector &v) {
    require_dim(a.dim(), v.dim(), "mat_vec");
    ComplexVector r(a.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        Complex s = 0;
        for (size_t j = 0; j < a.dim(); j++) {
            s += a(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    size_t n = a.dim();
    ComplexMatrix r(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            r(j, i) = std::conj(a(i, j));
        }
    }
    return r;
}

Complex trace(const ComplexMatrix &a) {
    Complex s = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        s += a(i, i);
    }
    return s;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_dim(a.dim(), b.dim(), "trace_of_product");
    size_t n = a.dim();
    Complex s = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            s += a(i, j) * b(j, i);
        }
    }
    return s;
}

ComplexMatrix outer_product(const ComplexVector &u, const ComplexVector &v) {
    require_dim(u.dim(), v.dim(), "outer_product");
    size_t n = u.dim();
    ComplexMatrix r(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            r(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return r;
}

ComplexMatrix identity(size_t dim) {
    return ComplexMatrix::identity(dim);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_dim(a.dim(), b.dim(), "max_abs_diff");
    double m = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

bool approx_eq(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

double hermiticity_residue(const ComplexMatrix &a) {
    double m = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = i; j < a.dim(); j++) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    return hermiticity_residue(a) <= tol;
}

double unitarity_residue(const ComplexMatrix &a) {
    return max_abs_diff(mat_mul(adjoint(a), a), identity(a.dim()));
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    return unitarity_residue(a) <= tol;
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    ComplexMatrix r = mat_add(a, adjoint(a));
    r *= 0.5;
    return r;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    size_t n = a.dim();
    Eigen::MatrixXcd m(n, n);
    ComplexMatrix h = hermitian_part(a);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m(i, j) = h(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = solver.eigenvalues()(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    double s = 0;
    for (double lambda : hermitian_eigenvalues(mat_sub(a, b))) {
        s += std::abs(lambda);
    }
    return 0.5 * s;
}

}  // namespace dwwt
