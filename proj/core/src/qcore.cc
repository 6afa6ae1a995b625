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

#include "causaldet/qcore.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "causaldet/tolerances.h"

namespace causaldet {

namespace {

/// Cyclic Jacobi on a real symmetric matrix; returns the sorted diagonal.
template <size_t N>
std::array<double, N> symmetric_eigenvalues(std::array<double, N * N> a) {
    auto at = [&](size_t r, size_t c) -> double & {
        return a[r * N + c];
    };
    double scale = 0;
    for (double v : a) {
        scale += v * v;
    }
    scale = std::max(1.0, std::sqrt(scale));

    for (int sweep = 0; sweep < JACOBI_MAX_SWEEPS; sweep++) {
        double off = 0;
        for (size_t p = 0; p < N; p++) {
            for (size_t q = p + 1; q < N; q++) {
                off += at(p, q) * at(p, q);
            }
        }
        if (std::sqrt(off) <= JACOBI_THRESHOLD * scale) {
            break;
        }
        for (size_t p = 0; p < N; p++) {
            for (size_t q = p + 1; q < N; q++) {
                double apq = at(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t k = 0; k < N; k++) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < N; k++) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::array<double, N> out;
    for (size_t k = 0; k < N; k++) {
        out[k] = at(k, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 column(const Real3 &m, size_t c) {
    return {m(0, c), m(1, c), m(2, c)};
}

void set_column(Real3 &m, size_t c, const Vec3 &v) {
    for (size_t r = 0; r < 3; r++) {
        m(r, c) = v[r];
    }
}

Vec3 normalized(const Vec3 &v) {
    double n = std::sqrt(dot(v, v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

/// Any unit vector orthogonal to the unit vector v.
Vec3 orthogonal_unit(const Vec3 &v) {
    Vec3 probe{1, 0, 0};
    if (std::abs(v[0]) > 0.6) {
        probe = {0, 1, 0};
    }
    return normalized(cross(v, probe));
}

}  // namespace

double max_abs_diff(const Real3 &a, const Real3 &b) {
    double m = 0;
    for (size_t k = 0; k < 9; k++) {
        m = std::max(m, std::abs(a.e[k] - b.e[k]));
    }
    return m;
}

Mat2 pauli(int index) {
    const Complex i{0, 1};
    Mat2 m;
    switch (index) {
        case 0:
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 1:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 2:
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        case 3:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
        default:
            throw std::invalid_argument("Pauli index must be in 0..3, got " + std::to_string(index));
    }
    return m;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 m;
    for (size_t ar = 0; ar < 2; ar++) {
        for (size_t ac = 0; ac < 2; ac++) {
            for (size_t br = 0; br < 2; br++) {
                for (size_t bc = 0; bc < 2; bc++) {
                    m(ar * 2 + br, ac * 2 + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return m;
}

std::array<double, 2> hermitian_eigenvalues(const Mat2 &h) {
    if (!is_hermitian(h, HERMITIAN_TOL)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    double a = h(0, 0).real();
    double d = h(1, 1).real();
    double mean = (a + d) / 2;
    double radius = std::hypot((a - d) / 2, std::abs(h(0, 1)));
    return {mean - radius, mean + radius};
}

std::array<double, 4> hermitian_eigenvalues(const Mat4 &h) {
    if (!is_hermitian(h, HERMITIAN_TOL)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    // H = A + iB is represented by the real symmetric [[A, -B], [B, A]],
    // whose spectrum is that of H with every eigenvalue doubled.
    constexpr size_t n = 4;
    std::array<double, 4 * n * n> real{};
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            // Symmetrize so that tiny Hermiticity defects cannot bias the result.
            Complex v = (h(r, c) + std::conj(h(c, r))) / 2.0;
            real[r * 2 * n + c] = v.real();
            real[(r + n) * 2 * n + (c + n)] = v.real();
            real[r * 2 * n + (c + n)] = -v.imag();
            real[(r + n) * 2 * n + c] = v.imag();
        }
    }
    auto doubled = symmetric_eigenvalues<2 * n>(real);
    return {doubled[0], doubled[2], doubled[4], doubled[6]};
}

double det3(const Real3 &m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool is_so3(const Real3 &m, double tol) {
    return max_abs_diff(m.transpose() * m, Real3::identity()) <= tol && std::abs(det3(m) - 1) <= tol;
}

Svd3 svd3(const Real3 &m) {
    // One-sided Jacobi: orthogonalize the columns of a = m * v.
    Real3 a = m;
    Real3 v = Real3::identity();
    for (int sweep = 0; sweep < JACOBI_MAX_SWEEPS; sweep++) {
        bool rotated = false;
        for (size_t p = 0; p < 3; p++) {
            for (size_t q = p + 1; q < 3; q++) {
                Vec3 ap = column(a, p);
                Vec3 aq = column(a, q);
                double alpha = dot(ap, ap);
                double beta = dot(aq, aq);
                double gamma = dot(ap, aq);
                if (std::abs(gamma) <= JACOBI_THRESHOLD * std::sqrt(alpha * beta) || gamma == 0) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t);
                double s = c * t;
                for (size_t r = 0; r < 3; r++) {
                    double x = a(r, p);
                    double y = a(r, q);
                    a(r, p) = c * x - s * y;
                    a(r, q) = s * x + c * y;
                    x = v(r, p);
                    y = v(r, q);
                    v(r, p) = c * x - s * y;
                    v(r, q) = s * x + c * y;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::array<size_t, 3> order{0, 1, 2};
    Vec3 norms{};
    for (size_t c = 0; c < 3; c++) {
        Vec3 col = column(a, c);
        norms[c] = std::sqrt(dot(col, col));
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return norms[x] > norms[y];
    });

    Svd3 out;
    double largest = norms[order[0]];
    double cutoff = largest * 1e-15;
    std::array<bool, 3> have{};
    for (size_t k = 0; k < 3; k++) {
        size_t c = order[k];
        out.s[k] = norms[c];
        set_column(out.v, k, column(v, c));
        if (norms[c] > cutoff && norms[c] > 0) {
            Vec3 col = column(a, c);
            set_column(out.u, k, {col[0] / norms[c], col[1] / norms[c], col[2] / norms[c]});
            have[k] = true;
        }
    }
    // Complete u to an orthonormal basis where singular values vanish.
    if (!have[0]) {
        out.u = Real3::identity();
    } else if (!have[1]) {
        Vec3 u0 = column(out.u, 0);
        Vec3 u1 = orthogonal_unit(u0);
        set_column(out.u, 1, u1);
        set_column(out.u, 2, cross(u0, u1));
    } else if (!have[2]) {
        set_column(out.u, 2, cross(column(out.u, 0), column(out.u, 1)));
    }
    return out;
}

Real3 rotation_from_vector(const Vec3 &w) {
    double theta = std::sqrt(dot(w, w));
    Real3 k;
    k(0, 1) = -w[2];
    k(0, 2) = w[1];
    k(1, 0) = w[2];
    k(1, 2) = -w[0];
    k(2, 0) = -w[1];
    k(2, 1) = w[0];
    if (theta < 1e-12) {
        return Real3::identity() + k;
    }
    k *= 1 / theta;
    return Real3::identity() + std::sin(theta) * k + (1 - std::cos(theta)) * (k * k);
}

}  // namespace causaldet
