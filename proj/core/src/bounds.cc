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

#include "causaldet/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "causaldet/channels.h"
#include "causaldet/qcore.h"
#include "causaldet/states.h"

namespace causaldet {

namespace {

constexpr std::array<Vec3, 4> kTetrahedron{{{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};

/// Restarts beyond the first are seeded from the best point so far; a few
/// rounds of this recover precision Nelder-Mead loses in higher dimensions.
constexpr int kPolishRounds = 8;

size_t weight_offset(int n) {
    return 3 * static_cast<size_t>(n);
}

size_t tetra_offset(int n) {
    return weight_offset(n) + (n == 1 ? 0 : static_cast<size_t>(n));
}

std::vector<double> weights_of(const BoundaryParams &x, int n) {
    if (n == 1) {
        return {1.0};
    }
    std::vector<double> w(static_cast<size_t>(n));
    double total = 0;
    for (int m = 0; m < n; m++) {
        double v = x[weight_offset(n) + m];
        w[m] = v * v;
        total += w[m];
    }
    if (total == 0) {
        std::fill(w.begin(), w.end(), 1.0 / n);
        return w;
    }
    for (auto &v : w) {
        v /= total;
    }
    return w;
}

Vec3 tetra_point(const BoundaryParams &x, int n) {
    size_t off = tetra_offset(n);
    std::array<double, 4> lambda{};
    double total = 0;
    for (size_t i = 0; i < 4; i++) {
        lambda[i] = x[off + i] * x[off + i];
        total += lambda[i];
    }
    if (total == 0) {
        lambda = {0.25, 0.25, 0.25, 0.25};
        total = 1;
    }
    Vec3 t{};
    for (size_t i = 0; i < 4; i++) {
        for (size_t d = 0; d < 3; d++) {
            t[d] += lambda[i] / total * kTetrahedron[i][d];
        }
    }
    return t;
}

BoundaryParams random_start(NdcClass ndc, Rng &rng) {
    int n = terms_for(ndc);
    BoundaryParams x(boundary_param_count(ndc));
    for (size_t i = 0; i < weight_offset(n); i++) {
        x[i] = std::numbers::pi * (2 * rng.uniform() - 1);
    }
    for (size_t i = weight_offset(n); i < x.size(); i++) {
        x[i] = rng.uniform();
    }
    return x;
}

struct NelderMeadResult {
    BoundaryParams x;
    double f;
};

/// Minimizes f from x0 with the standard reflection/expansion/contraction/shrink moves.
template <typename F>
NelderMeadResult nelder_mead(const F &f, const BoundaryParams &x0, double step, int max_iterations, double tol) {
    const size_t dim = x0.size();
    std::vector<BoundaryParams> simplex(dim + 1, x0);
    for (size_t i = 0; i < dim; i++) {
        simplex[i + 1][i] += step;
    }
    std::vector<double> values(dim + 1);
    for (size_t i = 0; i <= dim; i++) {
        values[i] = f(simplex[i]);
    }
    std::vector<size_t> order(dim + 1);
    BoundaryParams centroid(dim);
    BoundaryParams trial(dim);
    BoundaryParams trial2(dim);

    auto along = [&](BoundaryParams &out, const BoundaryParams &from, double coef) {
        for (size_t d = 0; d < dim; d++) {
            out[d] = centroid[d] + coef * (from[d] - centroid[d]);
        }
    };

    for (int iter = 0; iter < max_iterations; iter++) {
        for (size_t i = 0; i <= dim; i++) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return values[a] < values[b];
        });
        size_t best = order[0];
        size_t worst = order[dim];
        size_t second_worst = order[dim - 1];
        if (values[worst] - values[best] < tol) {
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i <= dim; i++) {
            if (i == worst) {
                continue;
            }
            for (size_t d = 0; d < dim; d++) {
                centroid[d] += simplex[i][d] / static_cast<double>(dim);
            }
        }

        along(trial, simplex[worst], -1.0);
        double f_reflect = f(trial);
        if (f_reflect < values[best]) {
            along(trial2, simplex[worst], -2.0);
            double f_expand = f(trial2);
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                values[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                values[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = f_reflect;
            continue;
        }
        bool outside = f_reflect < values[worst];
        along(trial2, outside ? trial : simplex[worst], 0.5);
        double f_contract = f(trial2);
        if (f_contract < (outside ? f_reflect : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = f_contract;
            continue;
        }
        for (size_t i = 0; i <= dim; i++) {
            if (i == best) {
                continue;
            }
            for (size_t d = 0; d < dim; d++) {
                simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            }
            values[i] = f(simplex[i]);
        }
    }
    size_t best = static_cast<size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    return {simplex[best], values[best]};
}

Unitary2 pauli_unitary(int index) {
    return Unitary2::from_matrix(pauli(index));
}

}  // namespace

std::string to_string(NdcClass ndc) {
    switch (ndc) {
        case NdcClass::One:
            return "1";
        case NdcClass::Two:
            return "2";
        default:
            return ">=3";
    }
}

NdcClass parse_ndc_class(const std::string &text) {
    if (text == "1") {
        return NdcClass::One;
    }
    if (text == "2") {
        return NdcClass::Two;
    }
    if (text == "3" || text == ">=3" || text == "3+") {
        return NdcClass::ThreeOrMore;
    }
    throw std::invalid_argument("ndc class must be 1, 2 or >=3, got '" + text + "'");
}

NdcClass ndc_class_of(size_t n) {
    if (n < 1) {
        throw std::invalid_argument("a channel has at least one term");
    }
    if (n == 1) {
        return NdcClass::One;
    }
    return n == 2 ? NdcClass::Two : NdcClass::ThreeOrMore;
}

int terms_for(NdcClass ndc) {
    return static_cast<int>(ndc);
}

RangeInterval theoretical_range(const Mechanism &mechanism) {
    if (mechanism.kind == Mechanism::Kind::CommonCause) {
        return {-1.0, 1.0 / 27, "common cause: singlet state", "common cause: Werner state with omega = -1/3"};
    }
    if (mechanism.n < 1) {
        throw std::invalid_argument("a direct cause needs at least one unitary term");
    }
    const std::string identity = "direct cause: identity unitary";
    if (mechanism.n == 1) {
        return {1.0, 1.0, identity, identity};
    }
    if (mechanism.n == 2) {
        return {0.0, 1.0, "direct cause: equal mixture of identity and sigma_x", identity};
    }
    return {-1.0 / 27, 1.0, "direct cause: equal mixture of sigma_x, sigma_y, sigma_z", identity};
}

std::vector<Witness> endpoint_witnesses() {
    std::vector<Witness> out;
    out.push_back({"identity unitary", DirectCause{MixedUnitaryChannel::single(Unitary2::identity())}, 1.0});
    out.push_back({"equal mixture of identity and sigma_x",
                   DirectCause{MixedUnitaryChannel::create({{0.5, Unitary2::identity()}, {0.5, pauli_unitary(1)}})},
                   0.0});
    out.push_back({"equal mixture of sigma_x, sigma_y, sigma_z",
                   DirectCause{MixedUnitaryChannel::create(
                       {{1.0 / 3, pauli_unitary(1)}, {1.0 / 3, pauli_unitary(2)}, {1.0 / 3, pauli_unitary(3)}})},
                   -1.0 / 27});
    out.push_back({"singlet state", CommonCause{bell_state(3)}, -1.0});
    out.push_back({"Werner state with omega = -1/3", CommonCause{werner_state(-1.0 / 3)}, 1.0 / 27});
    return out;
}

size_t boundary_param_count(NdcClass ndc) {
    return tetra_offset(terms_for(ndc)) + 4;
}

double boundary_objective(NdcClass ndc, double p, const BoundaryParams &x) {
    int n = terms_for(ndc);
    auto weights = weights_of(x, n);
    Real3 direct;
    for (int m = 0; m < n; m++) {
        Vec3 w{x[3 * m], x[3 * m + 1], x[3 * m + 2]};
        direct += weights[m] * rotation_from_vector(w).transpose();
    }
    Real3 c = p * direct + (1 - p) * Real3::diag(tetra_point(x, n));
    return det3(c);
}

BoundaryParams embed_params(const BoundaryParams &x, NdcClass from, NdcClass to) {
    int n_from = terms_for(from);
    int n_to = terms_for(to);
    if (n_to < n_from) {
        throw std::invalid_argument("can only embed into a class with at least as many terms");
    }
    BoundaryParams y(boundary_param_count(to), 0.0);
    for (size_t i = 0; i < weight_offset(n_from); i++) {
        y[i] = x[i];
    }
    if (n_to > 1) {
        for (int m = 0; m < n_from; m++) {
            y[weight_offset(n_to) + m] = n_from == 1 ? 1.0 : x[weight_offset(n_from) + m];
        }
    }
    for (size_t i = 0; i < 4; i++) {
        y[tetra_offset(n_to) + i] = x[tetra_offset(n_from) + i];
    }
    return y;
}

BoundaryResult optimize_boundary_detailed(NdcClass ndc, double p, Direction direction,
                                          const OptimizerOptions &options, Rng &rng,
                                          const std::vector<BoundaryParams> &warm_starts) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("mixing probability must be in [0, 1]");
    }
    if (options.restarts < 1) {
        throw std::invalid_argument("at least one restart is required");
    }
    double sign = direction == Direction::Max ? -1.0 : 1.0;
    auto objective = [&](const BoundaryParams &x) {
        return sign * boundary_objective(ndc, p, x);
    };

    NelderMeadResult best{{}, std::numeric_limits<double>::infinity()};
    double worst = -std::numeric_limits<double>::infinity();
    auto consider = [&](const NelderMeadResult &r) {
        if (r.f < best.f) {
            best = r;
        }
        worst = std::max(worst, r.f);
    };
    for (const auto &start : warm_starts) {
        if (start.size() != boundary_param_count(ndc)) {
            throw std::invalid_argument("warm start has the wrong number of parameters");
        }
        consider(nelder_mead(objective, start, 0.5, options.max_iterations, options.tolerance));
    }
    for (int r = 0; r < options.restarts; r++) {
        consider(nelder_mead(objective, random_start(ndc, rng), 0.5, options.max_iterations, options.tolerance));
    }
    for (int round = 0; round < kPolishRounds; round++) {
        auto polished = nelder_mead(objective, best.x, 0.05, options.max_iterations, options.tolerance);
        double gain = best.f - polished.f;
        if (polished.f < best.f) {
            best = polished;
        }
        if (!(gain > options.tolerance)) {
            break;
        }
    }
    return {sign * best.f, best.x, worst - best.f};
}

double optimize_boundary(NdcClass ndc, double p, Direction direction, int restarts, Rng &rng) {
    OptimizerOptions options;
    options.restarts = restarts;
    return optimize_boundary_detailed(ndc, p, direction, options, rng).value;
}

Mixture random_mixture(NdcClass ndc, double p, Rng &rng, int terms) {
    int n = terms > 0 ? terms : terms_for(ndc);
    std::vector<MixedUnitaryChannel::Term> channel_terms;
    double total = 0;
    for (int m = 0; m < n; m++) {
        double e = -std::log(1 - rng.uniform());
        total += e;
        channel_terms.push_back({e, haar_random_unitary(rng)});
    }
    for (auto &term : channel_terms) {
        term.weight /= total;
    }
    auto channel = MixedUnitaryChannel::create(std::move(channel_terms));
    return Mixture(p, std::move(channel), random_state(rng));
}

RangeInterval empirical_range(NdcClass ndc, double p, int samples, Rng &rng, int terms) {
    if (samples < 1) {
        throw std::invalid_argument("at least one sample is required");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("mixing probability must be in [0, 1]");
    }
    RangeInterval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), "", ""};
    for (int s = 0; s < samples; s++) {
        double delta = exact_correlation(random_mixture(ndc, p, rng, terms)).delta();
        if (delta < out.lo) {
            out.lo = delta;
            out.attained_lo = "random sample " + std::to_string(s);
        }
        if (delta > out.hi) {
            out.hi = delta;
            out.attained_hi = "random sample " + std::to_string(s);
        }
    }
    return out;
}

std::vector<double> p_grid(int steps) {
    if (steps < 2) {
        throw std::invalid_argument("a p grid needs at least 2 points");
    }
    std::vector<double> grid(static_cast<size_t>(steps));
    for (int i = 0; i < steps; i++) {
        grid[i] = static_cast<double>(i) / (steps - 1);
    }
    return grid;
}

BoundaryTable compute_boundary_table(NdcClass ndc, const std::vector<double> &grid, const OptimizerOptions &options,
                                     uint64_t seed, const BoundaryArgs *inner, NdcClass inner_ndc,
                                     BoundaryArgs *args) {
    if (inner != nullptr && (inner->upper.size() != grid.size() || inner->lower.size() != grid.size())) {
        throw std::invalid_argument("inner optimizers do not match the grid");
    }
    BoundaryTable table;
    table.ndc = ndc;
    table.p_grid = grid;
    table.restarts = options.restarts;
    table.max_iterations = options.max_iterations;
    table.tolerance = options.tolerance;
    table.seed = seed;
    BoundaryArgs found;

    for (Direction direction : {Direction::Max, Direction::Min}) {
        bool is_max = direction == Direction::Max;
        auto &values = is_max ? table.upper : table.lower;
        auto &found_args = is_max ? found.upper : found.lower;
        uint64_t stream = 16 * static_cast<uint64_t>(ndc) + (is_max ? 0 : 1);
        for (size_t i = 0; i < grid.size(); i++) {
            std::vector<BoundaryParams> warm;
            if (i > 0) {
                warm.push_back(found_args.back());
            }
            if (inner != nullptr) {
                warm.push_back(embed_params((is_max ? inner->upper : inner->lower)[i], inner_ndc, ndc));
            }
            Rng rng(seed, stream, i);
            auto result = optimize_boundary_detailed(ndc, grid[i], direction, options, rng, warm);
            values.push_back(result.value);
            found_args.push_back(result.argbest);
        }
    }
    validate_table(table);
    if (args != nullptr) {
        *args = std::move(found);
    }
    return table;
}

std::vector<BoundaryTable> compute_nested_tables(const std::vector<double> &grid, const OptimizerOptions &options,
                                                 uint64_t seed) {
    std::vector<BoundaryTable> tables;
    BoundaryArgs previous;
    NdcClass previous_ndc = NdcClass::One;
    for (NdcClass ndc : {NdcClass::One, NdcClass::Two, NdcClass::ThreeOrMore}) {
        BoundaryArgs current;
        tables.push_back(compute_boundary_table(ndc, grid, options, seed, tables.empty() ? nullptr : &previous,
                                                previous_ndc, &current));
        previous = std::move(current);
        previous_ndc = ndc;
    }
    return tables;
}

void validate_table(const BoundaryTable &table) {
    size_t n = table.p_grid.size();
    if (n < 2 || table.upper.size() != n || table.lower.size() != n) {
        throw std::invalid_argument("boundary table columns must have equal length >= 2");
    }
    for (size_t i = 0; i < n; i++) {
        double p = table.p_grid[i];
        if (!(p >= 0 && p <= 1) || (i > 0 && !(p > table.p_grid[i - 1]))) {
            throw std::invalid_argument("boundary table grid must be strictly ascending within [0, 1]");
        }
        if (!(table.lower[i] <= table.upper[i])) {
            throw std::invalid_argument("boundary table has lower > upper at p = " + std::to_string(p));
        }
    }
}

}  // namespace causaldet
