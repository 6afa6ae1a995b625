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

#ifndef CAUSALDET_SAMPLER_H
#define CAUSALDET_SAMPLER_H

#include <array>
#include <cstdint>
#include <string>

#include "causaldet/qcore.h"
#include "causaldet/rng.h"
#include "causaldet/scenario.h"

namespace causaldet {

/// Outcome counts for one measurement setting: sigma_j on A, sigma_k on B.
/// Cells are (o_A, o_B) = (+,+), (+,-), (-,+), (-,-).
struct ShotCounts {
    int j = 1;
    int k = 1;
    uint64_t npp = 0;
    uint64_t npm = 0;
    uint64_t nmp = 0;
    uint64_t nmm = 0;

    uint64_t total() const {
        return npp + npm + nmp + nmm;
    }
    ShotCounts &operator+=(const ShotCounts &other);
    bool operator==(const ShotCounts &other) const = default;
};

/// Nine settings, stored in row-major (j, k) order: records[3 * (j - 1) + (k - 1)].
struct ExperimentData {
    std::array<ShotCounts, 9> records{};
    uint64_t shots_per_setting = 0;
    uint64_t seed = 0;
    /// Serialized scenario for provenance; empty for externally supplied counts.
    std::string scenario_descriptor;

    const ShotCounts &at(int j, int k) const {
        return records[3 * (j - 1) + (k - 1)];
    }
    bool operator==(const ExperimentData &other) const = default;
};

/// Trials per generator stream in run_experiment.
inline constexpr uint64_t TRIAL_BLOCK = uint64_t{1} << 16;
/// Default number of bootstrap resamples.
inline constexpr int DEFAULT_RESAMPLES = 1000;

/// Samples shots trials of the setting (j, k) from the scenario, drawing from rng.
///
/// Direct branch: o_A from the input state, collapse onto the observed
/// eigenstate of sigma_j, pick a unitary term with probability a_m, evolve,
/// then o_B by the Born rule for sigma_k. Common branch: (o_A, o_B) jointly
/// from the shared state. A mixture spends one Bernoulli(p) draw per trial
/// to choose the branch.
ShotCounts simulate_setting(const CausalScenario &scenario, int j, int k, uint64_t shots, Rng &rng);

/// All nine settings with shots_per_setting trials each. Trial block b of
/// setting s draws from Rng(seed, s, b), so the result depends only on the
/// arguments.
ExperimentData run_experiment(const CausalScenario &scenario, uint64_t shots_per_setting, uint64_t seed,
                              std::string scenario_descriptor = {});

struct CorrelationEstimate {
    CorrelationMatrix c;
    /// Binomial standard error sqrt((1 - c^2) / n) per entry.
    Real3 se;
};

/// Throws DataError if any setting has no counts.
CorrelationEstimate estimate_correlation(const ExperimentData &data);

struct BootstrapResult {
    double delta_hat;
    double lo;
    double hi;
};

/// Percentile bootstrap for the causal determinant: every resample redraws
/// each setting's four cells from a multinomial with the empirical
/// frequencies. ci is the 2.5 / 97.5 percentile pair; delta_hat comes from
/// the original data. Requires resamples >= 100.
BootstrapResult bootstrap_delta(const ExperimentData &data, int resamples, uint64_t seed);

}  // namespace causaldet

#endif
