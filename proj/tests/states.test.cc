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

#include <gtest/gtest.h>

#include "causaldet/errors.h"
#include "causaldet/tolerances.h"
#include "oracles.h"

using namespace causaldet;

namespace {

void expect_vec_near(const Vec3 &a, const Vec3 &b, double tol) {
    for (size_t k = 0; k < 3; k++) {
        EXPECT_NEAR(a[k], b[k], tol) << "component " << k;
    }
}

}  // namespace

TEST(states, bloch_decompose_examples) {
    BlochForm mixed = bloch_decompose(TwoQubitState::from_density(Mat4::identity() * Complex(0.25)));
    expect_vec_near(mixed.v_a, {0, 0, 0}, 1e-15);
    expect_vec_near(mixed.v_b, {0, 0, 0}, 1e-15);
    EXPECT_LT(max_abs_diff(mixed.m, Real3{}), 1e-15);

    Mat4 zero_zero;
    zero_zero(0, 0) = 1;
    BlochForm zz = bloch_decompose(TwoQubitState::from_density(zero_zero));
    expect_vec_near(zz.v_a, {0, 0, 1}, 1e-15);
    expect_vec_near(zz.v_b, {0, 0, 1}, 1e-15);
    EXPECT_LT(max_abs_diff(zz.m, Real3::diag(0, 0, 1)), 1e-15);

    BlochForm singlet = bloch_decompose(bell_state(3));
    expect_vec_near(singlet.v_a, {0, 0, 0}, 1e-15);
    EXPECT_LT(max_abs_diff(singlet.m, -1.0 * Real3::identity()), 1e-15);
}

TEST(states, bloch_compose_examples) {
    TwoQubitState mixed = bloch_compose(BlochForm{});
    EXPECT_LT(max_abs_diff(mixed.rho(), Mat4::identity() * Complex(0.25)), 1e-15);

    BlochForm singlet_form;
    singlet_form.m = -1.0 * Real3::identity();
    EXPECT_LT(max_abs_diff(bloch_compose(singlet_form).rho(), bell_state(3).rho()), 1e-15);

    BlochForm bad;
    bad.m = Real3::identity();
    try {
        bloch_compose(bad);
        FAIL() << "expected PhysicalityError";
    } catch (const PhysicalityError &e) {
        std::string what = e.what();
        EXPECT_NE(what.find("not a physical state"), std::string::npos);
        EXPECT_NE(what.find("-0.5"), std::string::npos) << what;
    }
}

TEST(states, bloch_round_trip_random_states) {
    Rng rng(17);
    for (int trial = 0; trial < 1000; trial++) {
        TwoQubitState state = random_state(rng);
        BlochForm form = bloch_decompose(state);
        for (double v : form.m.e) {
            EXPECT_LE(std::abs(v), 1 + 1e-12);
        }
        for (size_t k = 0; k < 3; k++) {
            EXPECT_LE(std::abs(form.v_a[k]), 1 + 1e-12);
            EXPECT_LE(std::abs(form.v_b[k]), 1 + 1e-12);
        }
        EXPECT_LE(max_abs_diff(bloch_compose(form).rho(), state.rho()), RECON_TOL);
        // The correlation block agrees with outcome-probability enumeration.
        EXPECT_LT(max_abs_diff(form.m, oracle::common_cause_correlation_by_enumeration(state.rho())), 1e-12);
    }
}

TEST(states, bell_states) {
    EXPECT_LT(max_abs_diff(bloch_decompose(bell_state(3)).m, Real3::diag(-1, -1, -1)), 1e-15);
    EXPECT_LT(max_abs_diff(bloch_decompose(bell_state(0)).m, Real3::diag(1, -1, 1)), 1e-15);
    EXPECT_LT(max_abs_diff(bloch_decompose(bell_state(2)).m, Real3::diag(1, 1, -1)), 1e-15);
    EXPECT_LT(max_abs_diff(bloch_decompose(bell_state(1)).m, Real3::diag(-1, 1, 1)), 1e-15);
    // Psi- = (|HV> - |VH>)/sqrt(2): amplitude +1/sqrt(2) on |01>.
    EXPECT_NEAR(bell_state(3).rho()(1, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(bell_state(3).rho()(1, 2).real(), -0.5, 1e-15);
    for (int k = 0; k < 4; k++) {
        auto eig = hermitian_eigenvalues(bell_state(k).rho());
        EXPECT_NEAR(eig[3], 1, 1e-14);
        EXPECT_NEAR(eig[2], 0, 1e-14);
        Real3 m = bloch_decompose(bell_state(k)).m;
        for (size_t r = 0; r < 3; r++) {
            for (size_t c = 0; c < 3; c++) {
                if (r == c) {
                    EXPECT_NEAR(std::abs(m(r, c)), 1, 1e-15);
                } else {
                    EXPECT_NEAR(m(r, c), 0, 1e-15);
                }
            }
        }
    }
    EXPECT_THROW(bell_state(4), std::invalid_argument);
    EXPECT_THROW(bell_state(-1), std::invalid_argument);
}

TEST(states, werner_states) {
    EXPECT_LT(max_abs_diff(werner_state(1).rho(), bell_state(3).rho()), 1e-15);
    EXPECT_LT(max_abs_diff(werner_state(0).rho(), Mat4::identity() * Complex(0.25)), 1e-15);

    auto boundary = hermitian_eigenvalues(werner_state(-1.0 / 3).rho());
    EXPECT_NEAR(boundary[0], 0, 1e-12);
    EXPECT_LT(max_abs_diff(bloch_decompose(werner_state(-1.0 / 3)).m, Real3::identity() * (1.0 / 3)), 1e-12);

    for (int i = 0; i <= 40; i++) {
        double omega = -1.0 / 3 + i * (4.0 / 3) / 40;
        TwoQubitState w = werner_state(omega);
        BlochForm form = bloch_decompose(w);
        EXPECT_LT(max_abs_diff(form.m, -omega * Real3::identity()), 1e-12);
        auto eig = hermitian_eigenvalues(w.rho());
        EXPECT_NEAR(eig[0], std::min((1 - omega) / 4, (1 + 3 * omega) / 4), 1e-12);
        EXPECT_NEAR(eig[3], std::max((1 - omega) / 4, (1 + 3 * omega) / 4), 1e-12);
        EXPECT_NEAR(fidelity_pure(bell_state(3), w), (1 + 3 * omega) / 4, 1e-12);
    }
    EXPECT_THROW(werner_state(-0.34), PhysicalityError);
    EXPECT_THROW(werner_state(1.01), PhysicalityError);
}

TEST(states, random_states_are_physical) {
    Rng rng(99);
    for (int trial = 0; trial < 1000; trial++) {
        TwoQubitState s = random_state(rng);
        EXPECT_NEAR(s.rho().trace().real(), 1, 1e-10);
        auto eig = hermitian_eigenvalues(s.rho());
        EXPECT_GE(eig[0], -POS_TOL);
        EXPECT_NEAR(eig[0] + eig[1] + eig[2] + eig[3], 1, 1e-10);
    }
}

TEST(states, depolarize) {
    TwoQubitState singlet = bell_state(3);
    EXPECT_EQ(depolarize(singlet, 0).rho(), singlet.rho());
    EXPECT_LT(max_abs_diff(depolarize(singlet, 1).rho(), Mat4::identity() * Complex(0.25)), 1e-16);
    EXPECT_NEAR(fidelity_pure(singlet, depolarize(singlet, 0.048)), 0.964, 1e-12);
    Rng rng(4);
    TwoQubitState s = random_state(rng);
    EXPECT_LT(max_abs_diff(bloch_decompose(depolarize(s, 0.3)).m, 0.7 * bloch_decompose(s).m), 1e-12);
    EXPECT_THROW(depolarize(singlet, -0.1), std::invalid_argument);
    EXPECT_THROW(depolarize(singlet, 1.1), std::invalid_argument);
}

TEST(states, fidelity_pure) {
    EXPECT_NEAR(fidelity_pure(bell_state(3), bell_state(3)), 1, 1e-15);
    EXPECT_NEAR(fidelity_pure(bell_state(3), werner_state(0)), 0.25, 1e-15);
    EXPECT_NEAR(fidelity_pure(bell_state(3), bell_state(0)), 0, 1e-15);
    EXPECT_THROW(fidelity_pure(werner_state(0.5), bell_state(3)), std::invalid_argument);
}

TEST(states, invalid_density_matrices) {
    Mat4 not_unit_trace = Mat4::identity();
    EXPECT_THROW(TwoQubitState::from_density(not_unit_trace), PhysicalityError);
    Mat4 not_hermitian = Mat4::identity() * Complex(0.25);
    not_hermitian(0, 1) = 0.1;
    EXPECT_THROW(TwoQubitState::from_density(not_hermitian), PhysicalityError);
    Mat4 negative;
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    EXPECT_THROW(TwoQubitState::from_density(negative), PhysicalityError);
    EXPECT_THROW(QubitState::from_bloch({1, 1, 0}), PhysicalityError);
}

TEST(states, diagonalize_correlation_examples) {
    for (const Real3 &m : {-1.0 * Real3::identity(), Real3::diag(1, -1, 1)}) {
        LocalDiagonalization d = diagonalize_correlation(m);
        EXPECT_TRUE(is_so3(d.r_a, UNITARY_TOL));
        EXPECT_TRUE(is_so3(d.r_b, UNITARY_TOL));
        EXPECT_LT(max_abs_diff(d.r_a * Real3::diag(d.t) * d.r_b.transpose(), m), 1e-12);
        EXPECT_NEAR(d.t[0] * d.t[1] * d.t[2], det3(m), 1e-12);
    }
}

TEST(states, diagonalize_correlation_random) {
    Rng rng(23);
    for (int trial = 0; trial < 1000; trial++) {
        Real3 m = bloch_decompose(random_state(rng)).m;
        LocalDiagonalization d = diagonalize_correlation(m);
        EXPECT_TRUE(is_so3(d.r_a, UNITARY_TOL));
        EXPECT_TRUE(is_so3(d.r_b, UNITARY_TOL));
        EXPECT_LT(max_abs_diff(d.r_a * Real3::diag(d.t) * d.r_b.transpose(), m), 1e-10);
        EXPECT_NEAR(d.t[0] * d.t[1] * d.t[2], det3(m), 1e-10);
        // Physical correlation vectors lie in the Bell-diagonal tetrahedron:
        // |t1 +- t2| <= 1 -+ t3 in every sign combination.
        double t1 = d.t[0];
        double t2 = d.t[1];
        double t3 = d.t[2];
        EXPECT_LE(t1 + t2 + t3, 1 + 1e-9);
        EXPECT_LE(t1 - t2 - t3, 1 + 1e-9);
        EXPECT_LE(-t1 + t2 - t3, 1 + 1e-9);
        EXPECT_LE(-t1 - t2 + t3, 1 + 1e-9);
    }
}
