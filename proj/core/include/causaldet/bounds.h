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

#ifndef CAUSALDET_BOUNDS_H
#define CAUSALDET_BOUNDS_H

#include <cstdint>
#include <string>
#include <vector>

#include "causaldet/rng.h"
#include "causaldet/scenario.h"

namespace causaldet {

/// Direct-cause complexity classes: one unitary, two, or three and more.
enum class NdcClass { One = 1, Two = 2, ThreeOrMore = 3 };

/// "1", "2" or ">=3".
std::string to_string(NdcClass ndc);
/// Accepts "1", "2", "3", ">=3"; throws std::invalid_argument otherwise.
NdcClass parse_ndc_class(const std::string &text);
/// The class a channel with n declared terms belongs to (n >= 1).
NdcClass ndc_class_of(size_t n);
/// Number of unitary terms used to explore a class.
int terms_for(NdcClass ndc);

struct RangeInterval {
    double lo = 0;
    double hi = 0;
    std::string attained_lo;
    std::string attained_hi;
};

/// Direct cause with n unitary terms, or common cause.
struct Mechanism {
    enum class Kind { DirectCause, CommonCause };
    Kind kind = Kind::CommonCause;
    int n = 1;

    static Mechanism direct(int n) {
        return {Kind::DirectCause, n};
    }
    static Mechanism common() {
        return {Kind::CommonCause, 0};
    }
};

/// Known range of the causal determinant for a pure mechanism, with the
/// scenarios attaining each endpoint named. Throws std::invalid_argument if
/// a direct cause has n < 1.
RangeInterval theoretical_range(const Mechanism &mechanism);

/// Scenario attaining an endpoint of theoretical_range.
struct Witness {
    std::string name;
    CausalScenario scenario;
    double claimed_delta;
};
std::vector<Witness> endpoint_witnesses();

enum class Direction { Max, Min };

struct OptimizerOptions {
    int restarts = 64;
    /// Nelder-Mead iterations per start.
    int max_iterations = 200;
    /// Stop a start once the simplex values span less than this.
    double tolerance = 1e-9;
};

/// Search-space point for a class with n terms: n rotation vectors, n raw
/// weights (absent for n = 1; a_m = x_m^2 / sum x^2) and 4 raw barycentric
/// coordinates of the correlation vector in the Bell-diagonal tetrahedron.
using BoundaryParams = std::vector<double>;

struct BoundaryResult {
    double value = 0;
    BoundaryParams argbest;
    /// Distance between the best and worst final value over all starts.
    double spread = 0;
};

size_t boundary_param_count(NdcClass ndc);

/// Causal determinant of p * C_DC + (1 - p) * diag(t) at a search point.
double boundary_objective(NdcClass ndc, double p, const BoundaryParams &x);

/// Re-expresses a point of class 'from' as a point of the larger class 'to'
/// by appending zero-weight terms. The objective value is reproduced exactly.
BoundaryParams embed_params(const BoundaryParams &x, NdcClass from, NdcClass to);

/// Multi-start Nelder-Mead extremization of the causal determinant over
/// mixtures with mixing probability p. Points in warm_starts are searched
/// before the random restarts.
BoundaryResult optimize_boundary_detailed(NdcClass ndc, double p, Direction direction,
                                          const OptimizerOptions &options, Rng &rng,
                                          const std::vector<BoundaryParams> &warm_starts = {});

double optimize_boundary(NdcClass ndc, double p, Direction direction, int restarts, Rng &rng);

/// Random mixture of the class: Haar unitaries with flat Dirichlet weights
/// and a Hilbert-Schmidt state. A positive 'terms' overrides the number of
/// unitary terms. Throws std::invalid_argument unless p is in [0, 1].
Mixture random_mixture(NdcClass ndc, double p, Rng &rng, int terms = 0);

/// Extremes of the causal determinant over random mixtures (Haar unitaries,
/// flat Dirichlet weights, Hilbert-Schmidt states). A positive 'terms'
/// overrides the number of unitary terms drawn for the class.
RangeInterval empirical_range(NdcClass ndc, double p, int samples, Rng &rng, int terms = 0);

struct BoundaryTable {
    NdcClass ndc = NdcClass::One;
    std::vector<double> p_grid;
    std::vector<double> upper;
    std::vector<double> lower;
    int restarts = 0;
    int max_iterations = 0;
    double tolerance = 0;
    uint64_t seed = 0;
};

/// 'steps' evenly spaced points covering [0, 1] (steps >= 2).
std::vector<double> p_grid(int steps);

/// Optimizers found for every grid point, upper and lower curve.
struct BoundaryArgs {
    std::vector<BoundaryParams> upper;
    std::vector<BoundaryParams> lower;
};

/// Boundary curves for one class. If 'inner' holds the optimizers of a
/// smaller class on the same grid, they seed this search, so every interval
/// of this table contains the corresponding inner interval. The optimizers
/// found here are written to 'args' when it is non-null.
BoundaryTable compute_boundary_table(NdcClass ndc, const std::vector<double> &grid, const OptimizerOptions &options,
                                     uint64_t seed, const BoundaryArgs *inner = nullptr, NdcClass inner_ndc = NdcClass::One,
                                     BoundaryArgs *args = nullptr);

/// Tables for 1, 2 and >=3 terms, each seeded by the previous one.
std::vector<BoundaryTable> compute_nested_tables(const std::vector<double> &grid, const OptimizerOptions &options,
                                                 uint64_t seed);

/// Throws std::invalid_argument unless the grid is ascending in [0, 1],
/// the columns have equal length and lower <= upper everywhere.
void validate_table(const BoundaryTable &table);

}  // namespace causaldet

#endif
