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

#include "causaldet/infer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "causaldet/tolerances.h"

namespace causaldet {

namespace {

/// Rounding may push an exact determinant a few ulps past +-1.
double checked_delta(double delta) {
    if (!(delta >= -1 - CORRELATION_TOL && delta <= 1 + CORRELATION_TOL)) {
        throw std::invalid_argument("causal determinant must lie in [-1, 1]");
    }
    return std::clamp(delta, -1.0, 1.0);
}

/// Sub-interval of [0, 1] where a + b s >= 0, or nullopt.
std::optional<Interval> nonnegative_part(double a, double b) {
    if (b == 0) {
        return a >= 0 ? std::optional<Interval>(Interval{0, 1}) : std::nullopt;
    }
    double root = -a / b;
    Interval s = b > 0 ? Interval{root, 1} : Interval{0, root};
    s.lo = std::max(s.lo, 0.0);
    s.hi = std::min(s.hi, 1.0);
    if (s.lo > s.hi) {
        return std::nullopt;
    }
    return s;
}

}  // namespace

const char *to_string(Presence presence) {
    return presence == Presence::Yes ? "yes" : "undetermined";
}

InferenceReport classify(double delta, std::optional<Interval> ci) {
    delta = checked_delta(delta);
    if (ci && !(ci->lo <= delta && delta <= ci->hi)) {
        throw std::invalid_argument("confidence interval must contain the point estimate");
    }
    InferenceReport report;
    report.delta = delta;
    report.ci = ci;
    report.direct_score = delta;

    double low_end = ci ? ci->lo : delta;
    double high_end = ci ? ci->hi : delta;
    report.direct_cause_present = low_end > CAUSAL_THRESHOLD ? Presence::Yes : Presence::Undetermined;
    report.common_cause_present = high_end < -CAUSAL_THRESHOLD ? Presence::Yes : Presence::Undetermined;

    if (high_end >= 1 - CORRELATION_TOL) {
        report.ndc_min_pure_dc = 1;
    } else if (high_end >= 0) {
        report.ndc_min_pure_dc = 2;
    } else if (high_end >= -CAUSAL_THRESHOLD) {
        report.ndc_min_pure_dc = 3;
    }
    return report;
}

PRange p_range(double delta, const BoundaryTable &table, double slack) {
    delta = checked_delta(delta);
    return p_range(Interval{delta, delta}, table, slack);
}

PRange p_range(const Interval &observed_raw, const BoundaryTable &table, double slack) {
    if (!(observed_raw.lo <= observed_raw.hi)) {
        throw std::invalid_argument("observed interval is reversed or not a number");
    }
    // Interval estimates may stray outside the attainable range through sampling noise.
    Interval observed{std::clamp(observed_raw.lo, -1.0, 1.0), std::clamp(observed_raw.hi, -1.0, 1.0)};
    validate_table(table);
    const auto &grid = table.p_grid;
    if (grid.front() != 0 || grid.back() != 1) {
        throw std::invalid_argument("boundary table must cover p in [0, 1]");
    }

    PRange out;
    for (size_t i = 0; i + 1 < grid.size(); i++) {
        out.resolution = std::max(out.resolution, grid[i + 1] - grid[i]);
    }
    std::optional<Interval> hull;
    for (size_t i = 0; i + 1 < grid.size(); i++) {
        // Along the segment, s in [0, 1] maps to p = grid[i] + s * width.
        double width = grid[i + 1] - grid[i];
        double lower0 = table.lower[i];
        double lower_slope = table.lower[i + 1] - lower0;
        double upper0 = table.upper[i];
        double upper_slope = table.upper[i + 1] - upper0;
        // lower(s) - slack <= observed.hi and upper(s) + slack >= observed.lo.
        auto below = nonnegative_part(observed.hi + slack - lower0, -lower_slope);
        auto above = nonnegative_part(upper0 + slack - observed.lo, upper_slope);
        if (!below || !above) {
            continue;
        }
        double s_lo = std::max(below->lo, above->lo);
        double s_hi = std::min(below->hi, above->hi);
        if (s_lo > s_hi) {
            continue;
        }
        Interval piece{grid[i] + s_lo * width, grid[i] + s_hi * width};
        if (!hull) {
            hull = piece;
        } else {
            hull->lo = std::min(hull->lo, piece.lo);
            hull->hi = std::max(hull->hi, piece.hi);
        }
    }
    out.range = hull;
    return out;
}

InferenceReport infer(double delta, std::optional<Interval> ci, const std::vector<BoundaryTable> &tables) {
    InferenceReport report = classify(delta, ci);
    Interval observed = ci ? *ci : Interval{delta, delta};
    for (const auto &table : tables) {
        report.p_feasible[table.ndc] = p_range(observed, table);
    }
    return report;
}

}  // namespace causaldet
