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

#include "causaldet/scenario.h"

#include <cmath>
#include <stdexcept>

#include "causaldet/tolerances.h"

namespace causaldet {

Mixture::Mixture(double p, MixedUnitaryChannel channel, TwoQubitState state, QubitState input)
    : p_(p), channel_(std::move(channel)), state_(std::move(state)), input_(std::move(input)) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("mixing probability must be in [0, 1]");
    }
}

double causal_determinant(const Real3 &c) {
    return det3(c);
}

CorrelationMatrix CorrelationMatrix::exact(const Real3 &c) {
    for (double v : c.e) {
        if (!(std::abs(v) <= 1 + CORRELATION_TOL)) {
            throw std::logic_error("exact correlation entry outside [-1, 1]");
        }
    }
    double delta = causal_determinant(c);
    if (!(std::abs(delta) <= 1 + CORRELATION_TOL)) {
        throw std::logic_error("exact causal determinant outside [-1, 1]");
    }
    return CorrelationMatrix(c, delta);
}

CorrelationMatrix CorrelationMatrix::estimated(const Real3 &c) {
    return CorrelationMatrix(c, causal_determinant(c));
}

CorrelationMatrix exact_correlation(const CausalScenario &scenario) {
    struct Visitor {
        Real3 operator()(const DirectCause &dc) const {
            return channel_correlation(dc.channel);
        }
        Real3 operator()(const CommonCause &cc) const {
            return bloch_decompose(cc.state).m;
        }
        Real3 operator()(const Mixture &mix) const {
            return mix.p() * channel_correlation(mix.channel()) + (1 - mix.p()) * bloch_decompose(mix.state()).m;
        }
    };
    return CorrelationMatrix::exact(std::visit(Visitor{}, scenario));
}

}  // namespace causaldet
