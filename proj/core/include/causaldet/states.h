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

#ifndef CAUSALDET_STATES_H
#define CAUSALDET_STATES_H

#include "causaldet/qcore.h"
#include "causaldet/rng.h"

namespace causaldet {

/// Single-qubit density matrix: Hermitian, unit trace, positive semidefinite.
class QubitState {
   public:
    /// Throws PhysicalityError if rho is not a valid density matrix.
    static QubitState from_density(const Mat2 &rho);
    /// (I + r.sigma)/2; requires |r| <= 1.
    static QubitState from_bloch(const Vec3 &r);
    static QubitState maximally_mixed();

    const Mat2 &rho() const {
        return rho_;
    }
    Vec3 bloch() const;

    bool operator==(const QubitState &other) const = default;

   private:
    explicit QubitState(const Mat2 &rho) : rho_(rho) {
    }
    Mat2 rho_;
};

/// Two-qubit density matrix. Construction validates trace and positivity.
class TwoQubitState {
   public:
    /// Throws PhysicalityError naming the offending quantity if rho is not Hermitian,
    /// not unit trace, or has an eigenvalue below -POS_TOL.
    static TwoQubitState from_density(const Mat4 &rho);

    const Mat4 &rho() const {
        return rho_;
    }

   private:
    explicit TwoQubitState(const Mat4 &rho) : rho_(rho) {
    }
    Mat4 rho_;
};

/// rho = (I(x)I + v_a.sigma (x) I + I (x) v_b.sigma + sum_jk m_jk sigma_j (x) sigma_k) / 4.
struct BlochForm {
    Vec3 v_a{};
    Vec3 v_b{};
    Real3 m;
};

BlochForm bloch_decompose(const TwoQubitState &state);

/// Inverse of bloch_decompose. Throws PhysicalityError ("not a physical state")
/// reporting the most negative eigenvalue when the result is not PSD.
TwoQubitState bloch_compose(const BlochForm &form);

/// Bell states by index: 0 = Phi+, 1 = Phi-, 2 = Psi+, 3 = Psi- = (|01> - |10>)/sqrt(2).
TwoQubitState bell_state(int index);

/// (1 - omega) I/4 + omega |Psi-><Psi-|, physical for omega in [-1/3, 1].
TwoQubitState werner_state(double omega);

/// Hilbert-Schmidt random state: G G^dagger / tr(G G^dagger) with G complex Ginibre.
TwoQubitState random_state(Rng &rng);

/// (1 - eps) rho + eps I/4, eps in [0, 1].
TwoQubitState depolarize(const TwoQubitState &state, double eps);

/// <psi|rho|psi> for a rank-1 target |psi><psi|.
double fidelity_pure(const TwoQubitState &target, const TwoQubitState &state);

/// m = r_a * diag(t) * r_b^T with r_a, r_b in SO(3).
struct LocalDiagonalization {
    Real3 r_a;
    Real3 r_b;
    Vec3 t{};
};

LocalDiagonalization diagonalize_correlation(const Real3 &m);

}  // namespace causaldet

#endif
