// Copyright 2026 The causaldet Authors
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

#ifndef CAUSALDET_QCORE_H
#define CAUSALDET_QCORE_H

#include <array>
#include <complex>
#include <cstddef>

namespace causaldet {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Dense square complex matrix of fixed dimension, stored row-major.
template <size_t N>
struct CMatrix {
    std::array<Complex, N * N> e{};

    static constexpr size_t dim = N;

    Complex &operator()(size_t row, size_t col) {
        return e[row * N + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return e[row * N + col];
    }

    static CMatrix identity() {
        CMatrix m;
        for (size_t k = 0; k < N; k++) {
            m(k, k) = 1;
        }
        return m;
    }

    CMatrix adjoint() const {
        CMatrix m;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                m(r, c) = std::conj((*this)(c, r));
            }
        }
        return m;
    }

    Complex trace() const {
        Complex t = 0;
        for (size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    CMatrix &operator+=(const CMatrix &other) {
        for (size_t k = 0; k < N * N; k++) {
            e[k] += other.e[k];
        }
        return *this;
    }
    CMatrix &operator-=(const CMatrix &other) {
        for (size_t k = 0; k < N * N; k++) {
            e[k] -= other.e[k];
        }
        return *this;
    }
    CMatrix &operator*=(Complex s) {
        for (auto &v : e) {
            v *= s;
        }
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix &b) {
        return a += b;
    }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) {
        return a -= b;
    }
    friend CMatrix operator*(CMatrix a, Complex s) {
        return a *= s;
    }
    friend CMatrix operator*(Complex s, CMatrix a) {
        return a *= s;
    }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b) {
        CMatrix m;
        for (size_t r = 0; r < N; r++) {
            for (size_t k = 0; k < N; k++) {
                Complex v = a(r, k);
                for (size_t c = 0; c < N; c++) {
                    m(r, c) += v * b(k, c);
                }
            }
        }
        return m;
    }
    bool operator==(const CMatrix &other) const = default;
};

using Mat2 = CMatrix<2>;
using Mat4 = CMatrix<4>;

/// Largest entrywise modulus of a - b.
template <size_t N>
double max_abs_diff(const CMatrix<N> &a, const CMatrix<N> &b) {
    double m = 0;
    for (size_t k = 0; k < N * N; k++) {
        m = std::max(m, std::abs(a.e[k] - b.e[k]));
    }
    return m;
}

template <size_t N>
bool is_hermitian(const CMatrix<N> &m, double tol) {
    for (size_t r = 0; r < N; r++) {
        for (size_t c = r; c < N; c++) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

template <size_t N>
bool is_unitary(const CMatrix<N> &m, double tol) {
    return max_abs_diff(m * m.adjoint(), CMatrix<N>::identity()) <= tol;
}

/// Real 3x3 matrix, stored row-major. Holds Bloch rotations and correlation matrices.
struct Real3 {
    std::array<double, 9> e{};

    double &operator()(size_t row, size_t col) {
        return e[row * 3 + col];
    }
    double operator()(size_t row, size_t col) const {
        return e[row * 3 + col];
    }

    static Real3 identity() {
        return diag(1, 1, 1);
    }
    static Real3 diag(double a, double b, double c) {
        Real3 m;
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        return m;
    }
    static Real3 diag(const Vec3 &v) {
        return diag(v[0], v[1], v[2]);
    }

    Real3 transpose() const {
        Real3 m;
        for (size_t r = 0; r < 3; r++) {
            for (size_t c = 0; c < 3; c++) {
                m(r, c) = (*this)(c, r);
            }
        }
        return m;
    }

    Real3 &operator+=(const Real3 &other) {
        for (size_t k = 0; k < 9; k++) {
            e[k] += other.e[k];
        }
        return *this;
    }
    Real3 &operator-=(const Real3 &other) {
        for (size_t k = 0; k < 9; k++) {
            e[k] -= other.e[k];
        }
        return *this;
    }
    Real3 &operator*=(double s) {
        for (auto &v : e) {
            v *= s;
        }
        return *this;
    }
    friend Real3 operator+(Real3 a, const Real3 &b) {
        return a += b;
    }
    friend Real3 operator-(Real3 a, const Real3 &b) {
        return a -= b;
    }
    friend Real3 operator*(Real3 a, double s) {
        return a *= s;
    }
    friend Real3 operator*(double s, Real3 a) {
        return a *= s;
    }
    friend Real3 operator*(const Real3 &a, const Real3 &b) {
        Real3 m;
        for (size_t r = 0; r < 3; r++) {
            for (size_t c = 0; c < 3; c++) {
                m(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
            }
        }
        return m;
    }
    bool operator==(const Real3 &other) const = default;
};

double max_abs_diff(const Real3 &a, const Real3 &b);

/// Pauli operator by index: 0 = identity, 1 = X, 2 = Y, 3 = Z.
///
/// This is the single source of the sign convention used everywhere
/// (sigma_2 = [[0, -i], [i, 0]]). Throws std::invalid_argument for other indices.
Mat2 pauli(int index);

/// Tensor product a (x) b; the row index of a is the major index.
Mat4 kron(const Mat2 &a, const Mat2 &b);

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The 2x2 case is closed form, the 4x4 case uses cyclic complex Jacobi
/// rotations. Throws std::invalid_argument if the input is not Hermitian
/// within HERMITIAN_TOL.
std::array<double, 2> hermitian_eigenvalues(const Mat2 &h);
std::array<double, 4> hermitian_eigenvalues(const Mat4 &h);

/// Determinant by cofactor expansion along the first row.
double det3(const Real3 &m);

/// True iff m^T m = I within tol (entrywise) and det3(m) is within tol of +1.
bool is_so3(const Real3 &m, double tol);

/// Singular value decomposition m = u * diag(s) * v^T with u, v orthogonal
/// (determinant +1 or -1) and s non-negative, sorted descending.
struct Svd3 {
    Real3 u;
    Vec3 s;
    Real3 v;
};
Svd3 svd3(const Real3 &m);

/// Rotation matrix exp([w]_x) for rotation vector w (axis * angle), via Rodrigues.
Real3 rotation_from_vector(const Vec3 &w);

}  // namespace causaldet

#endif
