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

#include "causaldet/channels.h"

#include <cmath>
#include <stdexcept>

#include "causaldet/tolerances.h"

namespace causaldet {

Unitary2 Unitary2::from_matrix(const Mat2 &u) {
    if (!is_unitary(u, UNITARY_TOL)) {
        throw std::invalid_argument("matrix is not unitary within tolerance");
    }
    return Unitary2(u);
}

Unitary2 Unitary2::from_axis_angle(const Vec3 &axis, double angle) {
    double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(norm > 0) || !std::isfinite(norm) || !std::isfinite(angle)) {
        throw std::invalid_argument("rotation axis must be a finite non-zero vector");
    }
    Mat2 generator;
    for (int j = 1; j <= 3; j++) {
        generator += pauli(j) * Complex(axis[j - 1] / norm);
    }
    Mat2 u = pauli(0) * Complex(std::cos(angle / 2)) + generator * Complex(0, -std::sin(angle / 2));
    return Unitary2(u);
}

Unitary2 Unitary2::identity() {
    return Unitary2(Mat2::identity());
}

Unitary2 haar_random_unitary(Rng &rng) {
    std::array<Complex, 2> c0;
    std::array<Complex, 2> c1;
    for (auto *col : {&c0, &c1}) {
        for (auto &v : *col) {
            double re = rng.normal();
            double im = rng.normal();
            v = Complex(re, im);
        }
    }
    // Gram-Schmidt. The diagonal of the implied R factor is the column norm,
    // already real and positive, so the phase fix is the identity here.
    double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
    c0[0] /= n0;
    c0[1] /= n0;
    Complex overlap = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
    c1[0] -= overlap * c0[0];
    c1[1] -= overlap * c0[1];
    double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
    c1[0] /= n1;
    c1[1] /= n1;

    Mat2 u;
    u(0, 0) = c0[0];
    u(1, 0) = c0[1];
    u(0, 1) = c1[0];
    u(1, 1) = c1[1];
    return Unitary2::from_matrix(u);
}

Real3 rotation_of(const Unitary2 &u) {
    const Mat2 &m = u.matrix();
    Mat2 m_dag = m.adjoint();
    Real3 r;
    for (int k = 1; k <= 3; k++) {
        Mat2 rotated = m * pauli(k) * m_dag;
        for (int j = 1; j <= 3; j++) {
            Complex t = (pauli(j) * rotated).trace() * 0.5;
            if (std::abs(t.imag()) >= IMAG_TOL) {
                throw std::logic_error("rotation_of: trace has a non-negligible imaginary part");
            }
            r(j - 1, k - 1) = t.real();
        }
    }
    return r;
}

MixedUnitaryChannel MixedUnitaryChannel::create(std::vector<Term> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("a mixed-unitary channel needs at least one term");
    }
    double total = 0;
    for (const auto &term : terms) {
        if (!(term.weight >= 0) || !std::isfinite(term.weight)) {
            throw std::invalid_argument("channel weights must be finite and non-negative");
        }
        total += term.weight;
    }
    double deviation = std::abs(total - 1);
    if (deviation > WEIGHT_RENORM_TOL) {
        throw std::invalid_argument("channel weights sum to " + std::to_string(total) + ", expected 1");
    }
    bool renormalized = deviation > WEIGHT_SUM_TOL;
    if (renormalized) {
        for (auto &term : terms) {
            term.weight /= total;
        }
    }
    return MixedUnitaryChannel(std::move(terms), renormalized);
}

MixedUnitaryChannel MixedUnitaryChannel::single(const Unitary2 &u) {
    return MixedUnitaryChannel({Term{1.0, u}}, false);
}

QubitState apply_channel(const MixedUnitaryChannel &channel, const QubitState &rho_a) {
    Mat2 out;
    for (const auto &term : channel.terms()) {
        const Mat2 &u = term.unitary.matrix();
        out += (u * rho_a.rho() * u.adjoint()) * Complex(term.weight);
    }
    return QubitState::from_density(out);
}

Real3 channel_correlation(const MixedUnitaryChannel &channel) {
    Real3 c;
    for (const auto &term : channel.terms()) {
        c += term.weight * rotation_of(term.unitary).transpose();
    }
    return c;
}

}  // namespace causaldet
