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

#include <algorithm>
#include <boost/random/binomial_distribution.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "causaldet/errors.h"

namespace causaldet {

namespace {

constexpr uint64_t kBootstrapStream = 0xB0075742;

void check_axis(int axis) {
    if (axis < 1 || axis > 3) {
        throw std::invalid_argument("measurement axis must be 1, 2 or 3");
    }
}

Mat2 projector(int axis, int sign) {
    return (pauli(0) + pauli(axis) * Complex(sign)) * Complex(0.5);
}

double probability(const Complex &z) {
    return std::clamp(z.real(), 0.0, 1.0);
}

/// Outcome probabilities of one setting, precomputed once per call.
struct DirectModel {
    double p_a_plus = 0;
    // Cumulative unitary weights.
    std::vector<double> cumulative;
    // p(o_B = +1 | o_A, term): [0] for o_A = +1, [1] for o_A = -1.
    std::array<std::vector<double>, 2> p_b_plus;

    DirectModel(const MixedUnitaryChannel &channel, const QubitState &input, int j, int k) {
        p_a_plus = probability((input.rho() * projector(j, +1)).trace());
        Mat2 b_plus = projector(k, +1);
        double running = 0;
        for (const auto &term : channel.terms()) {
            running += term.weight;
            cumulative.push_back(running);
            const Mat2 &u = term.unitary.matrix();
            for (int side = 0; side < 2; side++) {
                Mat2 collapsed = projector(j, side == 0 ? +1 : -1);
                Mat2 evolved = u * collapsed * u.adjoint();
                p_b_plus[side].push_back(probability((evolved * b_plus).trace()));
            }
        }
    }

    /// Returns the cell index 0..3 for (+,+), (+,-), (-,+), (-,-).
    int sample(Rng &rng) const {
        int side = rng.uniform() < p_a_plus ? 0 : 1;
        size_t term = cumulative.size() == 1 ? 0 : rng.pick(cumulative);
        int b = rng.uniform() < p_b_plus[side][term] ? 0 : 1;
        return 2 * side + b;
    }
};

struct CommonModel {
    std::array<double, 4> cumulative{};

    CommonModel(const TwoQubitState &state, int j, int k) {
        double running = 0;
        int cell = 0;
        for (int a : {+1, -1}) {
            for (int b : {+1, -1}) {
                Mat4 effect = kron(projector(j, a), projector(k, b));
                running += probability((state.rho() * effect).trace());
                cumulative[cell++] = running;
            }
        }
    }

    int sample(Rng &rng) const {
        return static_cast<int>(rng.pick(cumulative));
    }
};

void tally(ShotCounts &counts, int cell) {
    switch (cell) {
        case 0:
            counts.npp++;
            break;
        case 1:
            counts.npm++;
            break;
        case 2:
            counts.nmp++;
            break;
        default:
            counts.nmm++;
            break;
    }
}

double correlation_of(const ShotCounts &counts) {
    double n = static_cast<double>(counts.total());
    return (static_cast<double>(counts.npp + counts.nmm) - static_cast<double>(counts.npm + counts.nmp)) / n;
}

/// Linear interpolation between order statistics (the common "type 7" rule).
double percentile(const std::vector<double> &sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

ShotCounts &ShotCounts::operator+=(const ShotCounts &other) {
    npp += other.npp;
    npm += other.npm;
    nmp += other.nmp;
    nmm += other.nmm;
    return *this;
}

ShotCounts simulate_setting(const CausalScenario &scenario, int j, int k, uint64_t shots, Rng &rng) {
    check_axis(j);
    check_axis(k);
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    ShotCounts counts;
    counts.j = j;
    counts.k = k;

    if (const auto *dc = std::get_if<DirectCause>(&scenario)) {
        DirectModel model(dc->channel, dc->input, j, k);
        for (uint64_t t = 0; t < shots; t++) {
            tally(counts, model.sample(rng));
        }
    } else if (const auto *cc = std::get_if<CommonCause>(&scenario)) {
        CommonModel model(cc->state, j, k);
        for (uint64_t t = 0; t < shots; t++) {
            tally(counts, model.sample(rng));
        }
    } else {
        const auto &mix = std::get<Mixture>(scenario);
        DirectModel direct(mix.channel(), mix.input(), j, k);
        CommonModel common(mix.state(), j, k);
        for (uint64_t t = 0; t < shots; t++) {
            bool use_direct = rng.uniform() < mix.p();
            tally(counts, use_direct ? direct.sample(rng) : common.sample(rng));
        }
    }
    return counts;
}

ExperimentData run_experiment(const CausalScenario &scenario, uint64_t shots_per_setting, uint64_t seed,
                              std::string scenario_descriptor) {
    if (shots_per_setting < 1) {
        throw std::invalid_argument("shots per setting must be at least 1");
    }
    ExperimentData data;
    data.shots_per_setting = shots_per_setting;
    data.seed = seed;
    data.scenario_descriptor = std::move(scenario_descriptor);
    for (int j = 1; j <= 3; j++) {
        for (int k = 1; k <= 3; k++) {
            uint64_t setting = 3 * (j - 1) + (k - 1);
            ShotCounts &record = data.records[setting];
            record.j = j;
            record.k = k;
            for (uint64_t block = 0; block * TRIAL_BLOCK < shots_per_setting; block++) {
                uint64_t n = std::min(TRIAL_BLOCK, shots_per_setting - block * TRIAL_BLOCK);
                Rng rng(seed, setting, block);
                record += simulate_setting(scenario, j, k, n, rng);
            }
        }
    }
    return data;
}

CorrelationEstimate estimate_correlation(const ExperimentData &data) {
    Real3 c;
    Real3 se;
    for (const auto &record : data.records) {
        uint64_t n = record.total();
        if (n == 0) {
            throw DataError("setting (" + std::to_string(record.j) + "," + std::to_string(record.k) +
                            ") has no counts");
        }
        double value = correlation_of(record);
        c(record.j - 1, record.k - 1) = value;
        se(record.j - 1, record.k - 1) = std::sqrt(std::max(0.0, 1 - value * value) / static_cast<double>(n));
    }
    return {CorrelationMatrix::estimated(c), se};
}

BootstrapResult bootstrap_delta(const ExperimentData &data, int resamples, uint64_t seed) {
    if (resamples < 100) {
        throw std::invalid_argument("bootstrap needs at least 100 resamples");
    }
    double delta_hat = estimate_correlation(data).c.delta();

    std::vector<double> deltas;
    deltas.reserve(static_cast<size_t>(resamples));
    for (int b = 0; b < resamples; b++) {
        Rng rng(seed, kBootstrapStream, static_cast<uint64_t>(b));
        Real3 c;
        for (const auto &record : data.records) {
            // Multinomial draw as a chain of conditional binomials.
            std::array<uint64_t, 4> cells{record.npp, record.npm, record.nmp, record.nmm};
            std::array<int64_t, 4> drawn{};
            int64_t remaining_trials = static_cast<int64_t>(record.total());
            uint64_t remaining_mass = record.total();
            for (size_t cell = 0; cell < 3; cell++) {
                if (remaining_trials == 0 || remaining_mass == 0) {
                    break;
                }
                double prob = static_cast<double>(cells[cell]) / static_cast<double>(remaining_mass);
                if (prob >= 1) {
                    drawn[cell] = remaining_trials;
                } else if (prob > 0) {
                    boost::random::binomial_distribution<int64_t, double> binomial(remaining_trials, prob);
                    drawn[cell] = binomial(rng);
                }
                remaining_trials -= drawn[cell];
                remaining_mass -= cells[cell];
            }
            drawn[3] += remaining_trials;
            double n = static_cast<double>(record.total());
            c(record.j - 1, record.k - 1) =
                (static_cast<double>(drawn[0] + drawn[3]) - static_cast<double>(drawn[1] + drawn[2])) / n;
        }
        deltas.push_back(causal_determinant(c));
    }
    std::sort(deltas.begin(), deltas.end());
    return {delta_hat, percentile(deltas, 0.025), percentile(deltas, 0.975)};
}

}  // namespace causaldet
