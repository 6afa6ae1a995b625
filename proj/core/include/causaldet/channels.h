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

#ifndef CAUSALDET_CHANNELS_H
#define CAUSALDET_CHANNELS_H

#include <vector>

#include "causaldet/qcore.h"
#include "causaldet/rng.h"
#include "causaldet/states.h"

namespace causaldet {

/// A 2x2 unitary, validated to UNITARY_TOL on construction.
class Unitary2 {
   public:
    /// Throws std::invalid_argument if u u^dagger differs from I by more than UNITARY_TOL.
    static Unitary2 from_matrix(const Mat2 &u);
    /// exp(-i angle (n.sigma) / 2) for the unit vector n along axis.
    static Unitary2 from_axis_angle(const Vec3 &axis, double angle);
    static Unitary2 identity();

    const Mat2 &matrix() const {
        return u_;
    }

   private:
    explicit Unitary2(const Mat2 &u) : u_(u) {
    }
    Mat2 u_;
};

/// Haar-distributed 2x2 unitary (QR of a complex Ginibre matrix with the phase fix).
Unitary2 haar_random_unitary(Rng &rng);

/// Bloch-sphere rotation R_U with u sigma_k u^dagger = sum_j R_jk sigma_j.
Real3 rotation_of(const Unitary2 &u);

/// rho -> sum_m a_m U_m rho U_m^dagger.
class MixedUnitaryChannel {
   public:
    struct Term {
        double weight;
        Unitary2 unitary;
    };

    /// Weights must be non-negative. A weight sum within WEIGHT_RENORM_TOL of 1
    /// is rescaled to 1 (and renormalized() reports it); anything further off
    /// throws std::invalid_argument, as does an empty term list.
    static MixedUnitaryChannel create(std::vector<Term> terms);
    static MixedUnitaryChannel single(const Unitary2 &u);

    const std::vector<Term> &terms() const {
        return terms_;
    }
    /// N^DC: the declared number of unitary terms.
    size_t size() const {
        return terms_.size();
    }
    bool renormalized() const {
        return renormalized_;
    }

   private:
    MixedUnitaryChannel(std::vector<Term> terms, bool renormalized)
        : terms_(std::move(terms)), renormalized_(renormalized) {
    }
    std::vector<Term> terms_;
    bool renormalized_ = false;
};

QubitState apply_channel(const MixedUnitaryChannel &channel, const QubitState &rho_a);

/// Direct-cause correlation matrix sum_m a_m R_{U_m}^T.
Real3 channel_correlation(const MixedUnitaryChannel &channel);

}  // namespace causaldet

#endif
