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

#ifndef CAUSALDET_INFER_H
#define CAUSALDET_INFER_H

#include <map>
#include <optional>
#include <vector>

#include "causaldet/bounds.h"

namespace causaldet {

/// Largest causal determinant reachable without a direct cause, and (negated)
/// the smallest reachable without a common cause.
inline constexpr double CAUSAL_THRESHOLD = 1.0 / 27;

struct Interval {
    double lo = 0;
    double hi = 0;
};

enum class Presence { Yes, Undetermined };

struct PRange {
    /// Hull of the feasible mixing probabilities; empty when infeasible.
    std::optional<Interval> range;
    /// Grid spacing of the table the range was read from.
    double resolution = 0;
};

struct InferenceReport {
    double delta = 0;
    std::optional<Interval> ci;
    Presence direct_cause_present = Presence::Undetermined;
    Presence common_cause_present = Presence::Undetermined;
    /// Minimal N^DC if the data came from a direct cause alone; empty when no
    /// pure direct cause can produce the observed value.
    std::optional<int> ndc_min_pure_dc;
    /// Larger means more direct-cause contribution. Uncalibrated; equal to delta.
    double direct_score = 0;
    std::map<NdcClass, PRange> p_feasible;
};

/// Threshold rules. With a confidence interval, presence claims use its
/// conservative end (lo for the direct cause, hi for the common cause) and
/// the N^DC bound uses hi. Throws std::invalid_argument if delta is outside
/// [-1, 1] by more than CORRELATION_TOL or not inside the interval.
InferenceReport classify(double delta, std::optional<Interval> ci = std::nullopt);

/// Mixing probabilities p whose [lower(p), upper(p)] meets the observed
/// value (or interval), with the curves interpolated linearly between grid
/// points and widened by slack. Interval ends are clamped to [-1, 1].
PRange p_range(double delta, const BoundaryTable &table, double slack = 1e-6);
PRange p_range(const Interval &observed, const BoundaryTable &table, double slack = 1e-6);

/// classify plus p_range for every supplied table.
InferenceReport infer(double delta, std::optional<Interval> ci, const std::vector<BoundaryTable> &tables);

const char *to_string(Presence presence);

}  // namespace causaldet

#endif
