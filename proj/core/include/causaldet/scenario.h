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

#ifndef CAUSALDET_SCENARIO_H
#define CAUSALDET_SCENARIO_H

#include <variant>

#include "causaldet/channels.h"
#include "causaldet/qcore.h"
#include "causaldet/states.h"

namespace causaldet {

/// B is A after the channel. The input state only matters for shot sampling.
struct DirectCause {
    MixedUnitaryChannel channel;
    QubitState input = QubitState::maximally_mixed();
};

/// A and B are the two halves of a shared state.
struct CommonCause {
    TwoQubitState state;
};

/// Per trial, the direct cause acts with probability p, otherwise the common cause.
class Mixture {
   public:
    /// Throws std::invalid_argument unless p is in [0, 1].
    Mixture(double p, MixedUnitaryChannel channel, TwoQubitState state,
            QubitState input = QubitState::maximally_mixed());

    double p() const {
        return p_;
    }
    const MixedUnitaryChannel &channel() const {
        return channel_;
    }
    const TwoQubitState &state() const {
        return state_;
    }
    const QubitState &input() const {
        return input_;
    }

   private:
    double p_;
    MixedUnitaryChannel channel_;
    TwoQubitState state_;
    QubitState input_;
};

using CausalScenario = std::variant<DirectCause, CommonCause, Mixture>;

/// 3x3 Pauli correlation matrix c_jk together with its determinant.
class CorrelationMatrix {
   public:
    /// For correlations computed from a scenario. Checks |c_jk| <= 1 and
    /// delta in [-1, 1], both up to CORRELATION_TOL; throws std::logic_error otherwise.
    static CorrelationMatrix exact(const Real3 &c);
    /// For estimates from finite data, which need not be physical.
    static CorrelationMatrix estimated(const Real3 &c);

    const Real3 &c() const {
        return c_;
    }
    double delta() const {
        return delta_;
    }

   private:
    CorrelationMatrix(const Real3 &c, double delta) : c_(c), delta_(delta) {
    }
    Real3 c_;
    double delta_;
};

/// The causal determinant: det of the correlation matrix.
double causal_determinant(const Real3 &c);

CorrelationMatrix exact_correlation(const CausalScenario &scenario);

}  // namespace causaldet

#endif
