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

#include "causaldet/states.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "causaldet/errors.h"
#include "causaldet/tolerances.h"

namespace causaldet {

namespace {

template <size_t N>
void validate_density(const CMatrix<N> &rho, const char *what) {
    if (!is_hermitian(rho, HERMITIAN_TOL)) {
        throw PhysicalityError(std::string("not a physical state: ") + what + " is not Hermitian");
    }
    Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > TRACE_TOL) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "not a physical state: " << what << " has trace " << tr.real() << " (expected 1)";
        throw PhysicalityError(msg.str());
    }
    auto eig = hermitian_eigenvalues(rho);
    if (eig[0] < -POS_TOL) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "not a physical state: " << what << " has negative eigenvalue " << eig[0];
        throw PhysicalityError(msg.str());
    }
}

Mat4 sigma_pair(int j, int k) {
    return kron(pauli(j), pauli(k));
}

double real_trace_of_product(const Mat4 &a, const Mat4 &b) {
    Complex t = 0;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            t += a(r, c) * b(c, r);
        }
    }
    if (std::abs(t.imag()) >= IMAG_TOL) {
        throw std::logic_error("Pauli expectation value has a non-negligible imaginary part");
    }
    return t.real();
}

}  // namespace

QubitState QubitState::from_density(const Mat2 &rho) {
    validate_density(rho, "single-qubit density matrix");
    return QubitState(rho);
}

QubitState QubitState::from_bloch(const Vec3 &r) {
    double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (!(norm <= 1 + POS_TOL)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "not a physical state: Bloch vector has length " << norm << " > 1";
        throw PhysicalityError(msg.str());
    }
    Mat2 rho = pauli(0);
    for (int j = 1; j <= 3; j++) {
        rho += pauli(j) * Complex(r[j - 1]);
    }
    rho *= 0.5;
    return QubitState(rho);
}

QubitState QubitState::maximally_mixed() {
    return QubitState(pauli(0) * Complex(0.5));
}

Vec3 QubitState::bloch() const {
    Vec3 r{};
    for (int j = 1; j <= 3; j++) {
        r[j - 1] = (rho_ * pauli(j)).trace().real();
    }
    return r;
}

TwoQubitState TwoQubitState::from_density(const Mat4 &rho) {
    validate_density(rho, "two-qubit density matrix");
    return TwoQubitState(rho);
}

BlochForm bloch_decompose(const TwoQubitState &state) {
    const Mat4 &rho = state.rho();
    BlochForm form;
    for (int j = 1; j <= 3; j++) {
        form.v_a[j - 1] = real_trace_of_product(rho, sigma_pair(j, 0));
        form.v_b[j - 1] = real_trace_of_product(rho, sigma_pair(0, j));
        for (int k = 1; k <= 3; k++) {
            form.m(j - 1, k - 1) = real_trace_of_product(rho, sigma_pair(j, k));
        }
    }
    return form;
}

TwoQubitState bloch_compose(const BlochForm &form) {
    Mat4 rho = Mat4::identity();
    for (int j = 1; j <= 3; j++) {
        rho += sigma_pair(j, 0) * Complex(form.v_a[j - 1]);
        rho += sigma_pair(0, j) * Complex(form.v_b[j - 1]);
        for (int k = 1; k <= 3; k++) {
            rho += sigma_pair(j, k) * Complex(form.m(j - 1, k - 1));
        }
    }
    rho *= 0.25;
    return TwoQubitState::from_density(rho);
}

TwoQubitState bell_state(int index) {
    if (index < 0 || index > 3) {
        throw std::invalid_argument("Bell state index must be in 0..3, got " + std::to_string(index));
    }
    // Amplitudes over |00>, |01>, |10>, |11>.
    const double h = 1 / std::sqrt(2.0);
    std::array<double, 4> psi{};
    switch (index) {
        case 0:
            psi = {h, 0, 0, h};
            break;
        case 1:
            psi = {h, 0, 0, -h};
            break;
        case 2:
            psi = {0, h, h, 0};
            break;
        default:
            psi = {0, h, -h, 0};
            break;
    }
    Mat4 rho;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            rho(r, c) = psi[r] * psi[c];
        }
    }
    return TwoQubitState::from_density(rho);
}

TwoQubitState werner_state(double omega) {
    if (!(omega >= -1.0 / 3 && omega <= 1)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "not a physical state: Werner parameter " << omega << " is outside [-1/3, 1]";
        throw PhysicalityError(msg.str());
    }
    Mat4 rho = Mat4::identity() * Complex((1 - omega) / 4) + bell_state(3).rho() * Complex(omega);
    return TwoQubitState::from_density(rho);
}

TwoQubitState random_state(Rng &rng) {
    Mat4 g;
    for (auto &v : g.e) {
        double re = rng.normal();
        double im = rng.normal();
        v = Complex(re, im);
    }
    Mat4 rho = g * g.adjoint();
    rho *= 1 / rho.trace().real();
    // Remove rounding asymmetry so the result is Hermitian to the last bit.
    rho = (rho + rho.adjoint()) * Complex(0.5);
    return TwoQubitState::from_density(rho);
}

TwoQubitState depolarize(const TwoQubitState &state, double eps) {
    if (!(eps >= 0 && eps <= 1)) {
        throw std::invalid_argument("depolarizing strength must be in [0, 1]");
    }
    Mat4 rho = state.rho() * Complex(1 - eps) + Mat4::identity() * Complex(eps / 4);
    return TwoQubitState::from_density(rho);
}

double fidelity_pure(const TwoQubitState &target, const TwoQubitState &state) {
    auto eig = hermitian_eigenvalues(target.rho());
    if (std::abs(eig[3] - 1) > POS_TOL || std::abs(eig[2]) > POS_TOL) {
        throw std::invalid_argument("fidelity target must be a pure (rank-1) state");
    }
    return real_trace_of_product(target.rho(), state.rho());
}

LocalDiagonalization diagonalize_correlation(const Real3 &m) {
    Svd3 svd = svd3(m);
    LocalDiagonalization out{svd.u, svd.v, svd.s};
    if (det3(out.r_a) < 0) {
        for (size_t r = 0; r < 3; r++) {
            out.r_a(r, 2) = -out.r_a(r, 2);
        }
        out.t[2] = -out.t[2];
    }
    if (det3(out.r_b) < 0) {
        for (size_t r = 0; r < 3; r++) {
            out.r_b(r, 2) = -out.r_b(r, 2);
        }
        out.t[2] = -out.t[2];
    }
    return out;
}

}  // namespace causaldet
