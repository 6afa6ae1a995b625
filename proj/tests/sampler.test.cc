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

#include "causaldet/sampler.h"

#include <gtest/gtest.h>

#include <cmath>

#include "causaldet/errors.h"

using namespace causaldet;

namespace {

CausalScenario singlet() {
    return CommonCause{bell_state(3)};
}

ShotCounts counts(int j, int k, uint64_t npp, uint64_t npm, uint64_t nmp, uint64_t nmm) {
    ShotCounts c;
    c.j = j;
    c.k = k;
    c.npp = npp;
    c.npm = npm;
    c.nmp = nmp;
    c.nmm = nmm;
    return c;
}

ExperimentData uniform_data(uint64_t npp, uint64_t npm, uint64_t nmp, uint64_t nmm) {
    ExperimentData data;
    for (int j = 1; j <= 3; j++) {
        for (int k = 1; k <= 3; k++) {
            data.records[3 * (j - 1) + (k - 1)] = counts(j, k, npp, npm, nmp, nmm);
        }
    }
    data.shots_per_setting = npp + npm + nmp + nmm;
    return data;
}

double max_error(const ExperimentData &data, const Real3 &exact) {
    return max_abs_diff(estimate_correlation(data).c.c(), exact);
}

}  // namespace

TEST(sampler, singlet_never_agrees_on_equal_axes) {
    Rng rng(1);
    for (int j = 1; j <= 3; j++) {
        for (uint64_t shots : {1, 17, 5000}) {
            ShotCounts c = simulate_setting(singlet(), j, j, shots, rng);
            EXPECT_EQ(c.npp, 0u);
            EXPECT_EQ(c.nmm, 0u);
            EXPECT_EQ(c.total(), shots);
        }
    }
}

TEST(sampler, identity_channel_on_up_state_is_deterministic) {
    CausalScenario dc = DirectCause{MixedUnitaryChannel::single(Unitary2::identity()), QubitState::from_bloch({0, 0, 1})};
    Rng rng(2);
    ShotCounts c = simulate_setting(dc, 3, 3, 1000, rng);
    EXPECT_EQ(c.npp, 1000u);
    EXPECT_EQ(c.total(), 1000u);
}

TEST(sampler, uncorrelated_state_gives_zero_correlation) {
    ExperimentData data = run_experiment(CommonCause{werner_state(0)}, 100000, 3);
    EXPECT_LT(max_error(data, Real3{}), 0.02);
}

TEST(sampler, simulate_setting_validates_arguments) {
    Rng rng(1);
    EXPECT_THROW(simulate_setting(singlet(), 0, 1, 10, rng), std::invalid_argument);
    EXPECT_THROW(simulate_setting(singlet(), 1, 4, 10, rng), std::invalid_argument);
    EXPECT_THROW(simulate_setting(singlet(), 1, 1, 0, rng), std::invalid_argument);
    EXPECT_THROW(run_experiment(singlet(), 0, 1), std::invalid_argument);
}

TEST(sampler, run_experiment_is_deterministic) {
    Rng rng(9);
    CausalScenario mix = Mixture(0.3, MixedUnitaryChannel::single(haar_random_unitary(rng)), random_state(rng));
    ExperimentData a = run_experiment(mix, 70000, 11);
    ExperimentData b = run_experiment(mix, 70000, 11);
    EXPECT_EQ(a, b);
    ExperimentData c = run_experiment(mix, 70000, 12);
    EXPECT_NE(a, c);
}

TEST(sampler, run_experiment_conserves_counts) {
    ExperimentData data = run_experiment(singlet(), 10000, 1);
    for (int j = 1; j <= 3; j++) {
        for (int k = 1; k <= 3; k++) {
            EXPECT_EQ(data.at(j, k).j, j);
            EXPECT_EQ(data.at(j, k).k, k);
            EXPECT_EQ(data.at(j, k).total(), 10000u);
        }
    }
    // Crosses a trial block boundary.
    ExperimentData large = run_experiment(singlet(), TRIAL_BLOCK + 3, 1);
    for (const auto &record : large.records) {
        EXPECT_EQ(record.total(), TRIAL_BLOCK + 3);
    }
}

TEST(sampler, haar_direct_cause_estimates_unit_delta) {
    Rng haar(7, 0x4AA5);
    CausalScenario dc = DirectCause{MixedUnitaryChannel::single(haar_random_unitary(haar))};
    ExperimentData data = run_experiment(dc, 100000, 2);
    EXPECT_NEAR(estimate_correlation(data).c.delta(), 1, 0.05);
}

TEST(sampler, estimate_correlation_examples) {
    ExperimentData agree = uniform_data(50, 0, 0, 50);
    CorrelationEstimate e = estimate_correlation(agree);
    EXPECT_EQ(e.c.c()(0, 0), 1);
    EXPECT_EQ(e.se(2, 2), 0);

    ExperimentData flat = uniform_data(25, 25, 25, 25);
    e = estimate_correlation(flat);
    EXPECT_EQ(e.c.c()(1, 2), 0);
    EXPECT_DOUBLE_EQ(e.se(1, 2), 0.1);
    EXPECT_EQ(e.c.delta(), 0);

    ExperimentData data = uniform_data(3, 1, 0, 0);
    EXPECT_DOUBLE_EQ(estimate_correlation(data).c.c()(0, 0), 0.5);
}

TEST(sampler, estimate_correlation_rejects_empty_setting) {
    ExperimentData data = uniform_data(1, 1, 1, 1);
    data.records[4] = counts(2, 2, 0, 0, 0, 0);
    EXPECT_THROW(estimate_correlation(data), DataError);
}

TEST(sampler, singlet_delta_estimate_is_near_minus_one) {
    ExperimentData data = run_experiment(singlet(), 100000, 1);
    double delta = estimate_correlation(data).c.delta();
    // Diagonal settings are exact; off-diagonal noise enters at second order
    // and may push the estimate just below -1.
    EXPECT_GE(delta, -1 - 1e-4);
    EXPECT_LE(delta, -0.97);
}

TEST(sampler, estimates_converge_with_shots) {
    Rng rng(21);
    CausalScenario mix =
        Mixture(0.6, MixedUnitaryChannel::create({{0.7, haar_random_unitary(rng)}, {0.3, haar_random_unitary(rng)}}),
                random_state(rng));
    Real3 exact = exact_correlation(mix).c();
    double previous = 1;
    int within = 0;
    int runs = 0;
    for (uint64_t shots : {1000, 10000, 100000, 1000000}) {
        int seeds = shots == 1000000 ? 4 : 20;
        double mean = 0;
        for (int seed = 0; seed < seeds; seed++) {
            double err = max_error(run_experiment(mix, shots, seed), exact);
            mean += err / seeds;
            within += err < 5 / std::sqrt(static_cast<double>(shots));
            runs++;
        }
        EXPECT_LT(mean, previous) << shots;
        previous = mean;
    }
    EXPECT_GE(within, 0.95 * runs);
}

TEST(sampler, mixture_estimates_are_unbiased) {
    Rng rng(31);
    auto channel = MixedUnitaryChannel::create({{0.5, haar_random_unitary(rng)}, {0.5, haar_random_unitary(rng)}});
    TwoQubitState state = random_state(rng);
    double p = 0.35;
    CausalScenario mix = Mixture(p, channel, state);
    Real3 expected = p * channel_correlation(channel) + (1 - p) * bloch_decompose(state).m;

    constexpr int seeds = 100;
    constexpr uint64_t shots = 2000;
    Real3 mean;
    for (int seed = 0; seed < seeds; seed++) {
        mean = mean + (1.0 / seeds) * estimate_correlation(run_experiment(mix, shots, seed)).c.c();
    }
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            double se = std::sqrt((1 - expected(i, j) * expected(i, j)) / (shots * seeds));
            EXPECT_NEAR(mean(i, j), expected(i, j), 3 * se) << i << "," << j;
        }
    }
}

TEST(sampler, bootstrap_of_deterministic_data_has_zero_width) {
    ExperimentData data = uniform_data(0, 40, 0, 0);
    BootstrapResult b = bootstrap_delta(data, 200, 1);
    EXPECT_EQ(b.lo, b.hi);
    EXPECT_EQ(b.delta_hat, b.lo);
}

TEST(sampler, bootstrap_covers_singlet_delta) {
    ExperimentData data = run_experiment(singlet(), 100000, 1);
    BootstrapResult b = bootstrap_delta(data, 1000, 1);
    EXPECT_LE(b.lo, -1);
    EXPECT_GE(b.hi, -1);
    EXPECT_EQ(b.delta_hat, estimate_correlation(data).c.delta());
}

TEST(sampler, bootstrap_width_scales_with_root_shots) {
    CausalScenario noisy = CommonCause{depolarize(bell_state(3), 0.048)};
    double narrow = 0;
    double wide = 0;
    for (int seed = 0; seed < 10; seed++) {
        BootstrapResult a = bootstrap_delta(run_experiment(noisy, 10000, seed), 1000, seed);
        BootstrapResult b = bootstrap_delta(run_experiment(noisy, 40000, seed), 1000, seed);
        wide += a.hi - a.lo;
        narrow += b.hi - b.lo;
    }
    EXPECT_NEAR(wide / narrow, 2, 0.6);
}

TEST(sampler, bootstrap_is_deterministic_and_validates) {
    ExperimentData data = run_experiment(CommonCause{werner_state(0.5)}, 5000, 4);
    BootstrapResult a = bootstrap_delta(data, 300, 8);
    BootstrapResult b = bootstrap_delta(data, 300, 8);
    EXPECT_EQ(a.lo, b.lo);
    EXPECT_EQ(a.hi, b.hi);
    EXPECT_LT(a.lo, a.hi);
    EXPECT_THROW(bootstrap_delta(data, 99, 8), std::invalid_argument);
}
