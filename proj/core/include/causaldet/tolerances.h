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

#ifndef CAUSALDET_TOLERANCES_H
#define CAUSALDET_TOLERANCES_H

namespace causaldet {

/// Smallest eigenvalue accepted for a positive semidefinite density matrix.
inline constexpr double POS_TOL = 1e-9;
/// Unitarity (U U^dagger = I) and SO(3) membership.
inline constexpr double UNITARY_TOL = 1e-10;
/// Entrywise reconstruction of a density matrix from its Bloch form.
inline constexpr double RECON_TOL = 1e-12;
/// Hermiticity accepted on input matrices.
inline constexpr double HERMITIAN_TOL = 1e-10;
/// Trace deviation accepted for a density matrix.
inline constexpr double TRACE_TOL = 1e-10;
/// Imaginary part tolerated in traces that are real analytically.
inline constexpr double IMAG_TOL = 1e-10;
/// Weight sums within this distance of 1 are renormalized; beyond it they are rejected.
inline constexpr double WEIGHT_RENORM_TOL = 1e-6;
/// Weight sums within this distance of 1 are taken as already normalized.
inline constexpr double WEIGHT_SUM_TOL = 1e-12;
/// Slack on |c_jk| <= 1 and on the causal determinant range for exact correlations.
inline constexpr double CORRELATION_TOL = 1e-9;

/// Cyclic Jacobi eigen-solver controls.
inline constexpr double JACOBI_THRESHOLD = 1e-14;
inline constexpr int JACOBI_MAX_SWEEPS = 100;

}  // namespace causaldet

#endif
