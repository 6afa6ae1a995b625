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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "causaldet/bounds.h"
#include "causaldet/errors.h"
#include "causaldet/infer.h"
#include "causaldet/io.h"
#include "causaldet/sampler.h"
#include "causaldet/version.h"

namespace causaldet::cli {

namespace {

// Generator streams for per-row seeds; disjoint from the library's own.
constexpr uint64_t kSweepStream = 0x5EE9;
constexpr uint64_t kHaarSweepStream = 0x5EEA;
constexpr uint64_t kFillStream = 0xF111;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingArtifact("cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// --scenario takes a file path or the JSON text itself.
json load_scenario_json(const std::string &arg) {
    if (arg.empty()) {
        throw UsageError("--scenario is required");
    }
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{' && !std::filesystem::exists(arg)) {
        return parse_json_text(arg, "--scenario");
    }
    return parse_json_text(read_file(arg), arg);
}

std::vector<BoundaryTable> load_tables(const std::string &path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        return boundary_tables_from_json(parse_json_text(text, path));
    }
    return boundary_tables_from_csv(text);
}

json envelope(const RunConfig &config, json settings) {
    settings["seed"] = config.seed;
    return {{"version", CAUSALDET_VERSION}, {"command", config.command}, {"config", std::move(settings)}};
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

uint64_t row_seed(uint64_t seed, uint64_t stream, uint64_t row) {
    Rng rng(seed, stream, row);
    return rng();
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto &cell : cells) {
        if (!line.empty()) {
            line += ",";
        }
        line += cell;
    }
    return line + "\n";
}

std::string num(double v) {
    return format_double(v);
}

struct Sampled {
    ExperimentData data;
    CorrelationEstimate estimate;
    BootstrapResult bootstrap;
};

Sampled sample(const CausalScenario &scenario, const RunConfig &config, uint64_t seed, std::string descriptor = {}) {
    ExperimentData data = run_experiment(scenario, config.shots, seed, std::move(descriptor));
    CorrelationEstimate estimate = estimate_correlation(data);
    BootstrapResult bootstrap = bootstrap_delta(data, config.resamples, seed);
    return {std::move(data), estimate, bootstrap};
}

void require_shots(const RunConfig &config, bool allow_exact) {
    if (config.shots == 0 && !allow_exact) {
        throw UsageError("--shots must be at least 1");
    }
}

std::string cmd_exact(const RunConfig &config) {
    json scenario_json = load_scenario_json(config.scenario);
    CausalScenario scenario = scenario_from_json(scenario_json);
    CorrelationMatrix c = exact_correlation(scenario);
    if (config.format == Format::Csv) {
        std::string header = "delta";
        std::string row = num(c.delta());
        for (int j = 0; j < 3; j++) {
            for (int k = 0; k < 3; k++) {
                header += ",c" + std::to_string(j + 1) + std::to_string(k + 1);
                row += "," + num(c.c()(j, k));
            }
        }
        return header + "\n" + row + "\n";
    }
    json out = envelope(config, {{"scenario", config.scenario}});
    out["scenario"] = to_json(scenario);
    out["C"] = to_json(c.c());
    out["delta"] = c.delta();
    return dump(out);
}

std::string cmd_simulate(const RunConfig &config) {
    require_shots(config, false);
    json scenario_json = load_scenario_json(config.scenario);
    CausalScenario scenario = scenario_from_json(scenario_json);
    Sampled s = sample(scenario, config, config.seed, to_json(scenario).dump());
    const Real3 &c = s.estimate.c.c();
    if (config.format == Format::Csv) {
        std::string out = "j,k,npp,npm,nmp,nmm,c,se,delta_hat,ci_lo,ci_hi\n";
        for (const auto &r : s.data.records) {
            out += csv_line({std::to_string(r.j), std::to_string(r.k), std::to_string(r.npp), std::to_string(r.npm),
                             std::to_string(r.nmp), std::to_string(r.nmm), num(c(r.j - 1, r.k - 1)),
                             num(s.estimate.se(r.j - 1, r.k - 1)), num(s.bootstrap.delta_hat), num(s.bootstrap.lo),
                             num(s.bootstrap.hi)});
        }
        return out;
    }
    json out = envelope(config, {{"scenario", config.scenario}, {"shots", config.shots}, {"resamples", config.resamples}});
    json data = to_json(s.data);
    for (auto &item : data.items()) {
        out[item.key()] = item.value();
    }
    out["C"] = to_json(c);
    out["se"] = to_json(s.estimate.se);
    out["delta_hat"] = s.bootstrap.delta_hat;
    out["ci"] = {s.bootstrap.lo, s.bootstrap.hi};
    out["delta_exact"] = exact_correlation(scenario).delta();
    return dump(out);
}

std::string cmd_sweep_werner(const RunConfig &config) {
    require_shots(config, true);
    if (config.omega_steps < 1) {
        throw UsageError("--omega-steps must be at least 1");
    }
    if (!(config.depolarize >= 0 && config.depolarize <= 1)) {
        throw UsageError("--depolarize must be in [0, 1]");
    }
    bool sampled = config.shots > 0;
    json rows = json::array();
    std::string csv = sampled ? "omega,delta_exact,delta_hat,ci_lo,ci_hi,seed\n" : "omega,delta_exact\n";
    int rejected = 0;
    for (int i = 0; i < config.omega_steps; i++) {
        double omega = config.omega_steps == 1
                           ? config.omega_min
                           : config.omega_min + (config.omega_max - config.omega_min) * i / (config.omega_steps - 1);
        std::optional<TwoQubitState> state;
        try {
            state = depolarize(werner_state(omega), config.depolarize);
        } catch (const std::exception &e) {
            std::cerr << "warning: skipping omega = " << num(omega) << ": " << e.what() << "\n";
            rejected++;
            continue;
        }
        CausalScenario scenario = CommonCause{*state};
        double exact = exact_correlation(scenario).delta();
        json row = {{"omega", omega}, {"delta_exact", exact}};
        if (sampled) {
            uint64_t seed = row_seed(config.seed, kSweepStream, static_cast<uint64_t>(i));
            Sampled s = sample(scenario, config, seed);
            row["delta_hat"] = s.bootstrap.delta_hat;
            row["ci"] = {s.bootstrap.lo, s.bootstrap.hi};
            row["seed"] = seed;
            csv += csv_line({num(omega), num(exact), num(s.bootstrap.delta_hat), num(s.bootstrap.lo), num(s.bootstrap.hi),
                             std::to_string(seed)});
        } else {
            csv += csv_line({num(omega), num(exact)});
        }
        rows.push_back(row);
    }
    if (rows.empty()) {
        throw PhysicalityError("no omega in the grid gives a physical Werner state");
    }
    if (config.format == Format::Csv) {
        return csv;
    }
    json out = envelope(config, {{"omega_min", config.omega_min},
                                 {"omega_max", config.omega_max},
                                 {"omega_steps", config.omega_steps},
                                 {"depolarize", config.depolarize},
                                 {"shots", config.shots},
                                 {"resamples", config.resamples}});
    out["rejected"] = rejected;
    out["rows"] = rows;
    return dump(out);
}

std::string cmd_sweep_haar(const RunConfig &config) {
    require_shots(config, true);
    if (config.count < 1) {
        throw UsageError("--count must be at least 1");
    }
    bool sampled = config.shots > 0;
    json rows = json::array();
    std::string csv = sampled ? "index,delta_exact,delta_hat,ci_lo,ci_hi,seed\n" : "index,delta_exact\n";
    for (int i = 0; i < config.count; i++) {
        Rng rng(config.seed, kHaarSweepStream, static_cast<uint64_t>(i));
        CausalScenario scenario = DirectCause{MixedUnitaryChannel::single(haar_random_unitary(rng))};
        double exact = exact_correlation(scenario).delta();
        json row = {{"index", i}, {"delta_exact", exact}};
        if (sampled) {
            uint64_t seed = row_seed(config.seed, kSweepStream, static_cast<uint64_t>(i));
            Sampled s = sample(scenario, config, seed);
            row["delta_hat"] = s.bootstrap.delta_hat;
            row["ci"] = {s.bootstrap.lo, s.bootstrap.hi};
            row["seed"] = seed;
            csv += csv_line({std::to_string(i), num(exact), num(s.bootstrap.delta_hat), num(s.bootstrap.lo),
                             num(s.bootstrap.hi), std::to_string(seed)});
        } else {
            csv += csv_line({std::to_string(i), num(exact)});
        }
        rows.push_back(row);
    }
    if (config.format == Format::Csv) {
        return csv;
    }
    json out = envelope(config, {{"count", config.count}, {"shots", config.shots}, {"resamples", config.resamples}});
    out["rows"] = rows;
    return dump(out);
}

std::optional<NdcClass> selected_class(const RunConfig &config) {
    if (config.ndc.empty() || config.ndc == "all") {
        return std::nullopt;
    }
    try {
        return parse_ndc_class(config.ndc);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--ndc: ") + e.what());
    }
}

std::string cmd_bounds(const RunConfig &config) {
    if (config.restarts < 1) {
        throw UsageError("--restarts must be at least 1");
    }
    if (config.p_steps < 2) {
        throw UsageError("--p-steps must be at least 2");
    }
    auto only = selected_class(config);
    OptimizerOptions options;
    options.restarts = config.restarts;
    // The smaller classes seed the larger ones, so all three are always computed.
    auto tables = compute_nested_tables(p_grid(config.p_steps), options, config.seed);
    if (only) {
        std::erase_if(tables, [&](const BoundaryTable &t) {
            return t.ndc != *only;
        });
    }
    if (config.format == Format::Csv) {
        return boundary_tables_to_csv(tables);
    }
    json out = envelope(config, {{"ndc", config.ndc.empty() ? "all" : config.ndc},
                                 {"p_steps", config.p_steps},
                                 {"restarts", config.restarts},
                                 {"max_iterations", options.max_iterations},
                                 {"tolerance", options.tolerance}});
    out["tables"] = json::array();
    for (const auto &t : tables) {
        out["tables"].push_back(to_json(t));
    }
    return dump(out);
}

std::string cmd_infer(const RunConfig &config) {
    if (config.delta.has_value() == !config.from.empty()) {
        throw UsageError("give exactly one of --delta and --from");
    }
    auto only = selected_class(config);
    if (only && config.bounds.empty()) {
        throw MissingArtifact("--ndc needs a boundary table; run 'bounds' and pass it with --bounds");
    }
    std::vector<BoundaryTable> tables;
    if (!config.bounds.empty()) {
        tables = load_tables(config.bounds);
        if (only) {
            std::erase_if(tables, [&](const BoundaryTable &t) {
                return t.ndc != *only;
            });
            if (tables.empty()) {
                throw MissingArtifact("'" + config.bounds + "' has no table for ndc class " + to_string(*only));
            }
        }
    }

    double delta = 0;
    std::optional<Interval> ci;
    json source;
    if (config.delta) {
        delta = *config.delta;
        source = {{"delta", delta}};
    } else {
        ExperimentData data = experiment_data_from_json(parse_json_text(read_file(config.from), config.from));
        // Without --seed the interval matches the one 'simulate' reported.
        uint64_t seed = config.seed_given ? config.seed : data.seed;
        BootstrapResult b = bootstrap_delta(data, config.resamples, seed);
        // Sampling noise can carry the estimate slightly past the attainable range.
        delta = std::clamp(b.delta_hat, -1.0, 1.0);
        ci = Interval{std::clamp(std::min(b.lo, delta), -1.0, 1.0), std::clamp(std::max(b.hi, delta), -1.0, 1.0)};
        source = {{"from", config.from}, {"resamples", config.resamples}, {"delta_hat_raw", b.delta_hat}, {"bootstrap_seed", seed}};
    }
    InferenceReport report;
    try {
        report = infer(delta, ci, tables);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--delta: ") + e.what());
    }

    if (config.format == Format::Csv) {
        std::string out = "ndc_class,p_lo,p_hi,resolution\n";
        for (const auto &[ndc, range] : report.p_feasible) {
            if (range.range) {
                out += csv_line({to_string(ndc), num(range.range->lo), num(range.range->hi), num(range.resolution)});
            } else {
                out += csv_line({to_string(ndc), "", "", num(range.resolution)});
            }
        }
        return out;
    }
    source["ndc"] = config.ndc;
    source["bounds"] = config.bounds;
    json out = envelope(config, source);
    out["report"] = to_json(report);
    return dump(out);
}

/// Linear interpolation of a boundary table at p.
std::pair<double, double> envelope_at(const BoundaryTable &t, double p) {
    auto it = std::upper_bound(t.p_grid.begin(), t.p_grid.end(), p);
    size_t i = it == t.p_grid.begin() ? 0 : std::min<size_t>(it - t.p_grid.begin() - 1, t.p_grid.size() - 2);
    double s = (p - t.p_grid[i]) / (t.p_grid[i + 1] - t.p_grid[i]);
    return {t.lower[i] + s * (t.lower[i + 1] - t.lower[i]), t.upper[i] + s * (t.upper[i + 1] - t.upper[i])};
}

std::string cmd_fill_regions(const RunConfig &config) {
    if (config.count < 1) {
        throw UsageError("--count must be at least 1");
    }
    if (config.p_steps < 2) {
        throw UsageError("--p-steps must be at least 2");
    }
    NdcClass ndc = selected_class(config).value_or(NdcClass::One);
    std::optional<BoundaryTable> table;
    if (!config.bounds.empty()) {
        for (auto &t : load_tables(config.bounds)) {
            if (t.ndc == ndc) {
                table = std::move(t);
            }
        }
        if (!table) {
            throw MissingArtifact("'" + config.bounds + "' has no table for ndc class " + to_string(ndc));
        }
    }
    bool sampled = config.shots > 0;
    std::string csv = "p,delta";
    if (sampled) {
        csv += ",delta_hat,ci_lo,ci_hi";
    }
    if (table) {
        csv += ",inside";
    }
    csv += "\n";
    json rows = json::array();
    int outside = 0;
    auto grid = p_grid(config.p_steps);
    for (size_t g = 0; g < grid.size(); g++) {
        Rng rng(config.seed, kFillStream, g);
        for (int s = 0; s < config.count; s++) {
            double p = grid[g];
            Mixture mixture = random_mixture(ndc, p, rng);
            double delta = exact_correlation(mixture).delta();
            json row = {{"p", p}, {"delta", delta}};
            std::string line = num(p) + "," + num(delta);
            if (sampled) {
                uint64_t seed = row_seed(config.seed, kFillStream + 1, g * static_cast<uint64_t>(config.count) + s);
                Sampled est = sample(mixture, config, seed);
                row["delta_hat"] = est.bootstrap.delta_hat;
                row["ci"] = {est.bootstrap.lo, est.bootstrap.hi};
                line += "," + num(est.bootstrap.delta_hat) + "," + num(est.bootstrap.lo) + "," + num(est.bootstrap.hi);
            }
            if (table) {
                auto [lo, hi] = envelope_at(*table, p);
                bool inside = delta >= lo - 1e-6 && delta <= hi + 1e-6;
                outside += !inside;
                row["inside"] = inside;
                line += inside ? ",1" : ",0";
            }
            rows.push_back(row);
            csv += line + "\n";
        }
    }
    if (outside > 0) {
        std::cerr << "warning: " << outside << " points fall outside the boundary table\n";
    }
    if (config.format == Format::Csv) {
        return csv;
    }
    json out = envelope(config, {{"ndc", to_string(ndc)},
                                 {"count", config.count},
                                 {"p_steps", config.p_steps},
                                 {"shots", config.shots},
                                 {"resamples", config.resamples},
                                 {"bounds", config.bounds}});
    out["rows"] = rows;
    return dump(out);
}

}  // namespace

std::string run(const RunConfig &config) {
    if (config.resamples < 100) {
        throw UsageError("--resamples must be at least 100");
    }
    if (config.command == "exact") {
        return cmd_exact(config);
    }
    if (config.command == "simulate") {
        return cmd_simulate(config);
    }
    if (config.command == "sweep-werner") {
        return cmd_sweep_werner(config);
    }
    if (config.command == "sweep-haar") {
        return cmd_sweep_haar(config);
    }
    if (config.command == "bounds") {
        return cmd_bounds(config);
    }
    if (config.command == "infer") {
        return cmd_infer(config);
    }
    if (config.command == "fill-regions") {
        return cmd_fill_regions(config);
    }
    throw UsageError("unknown command '" + config.command + "'");
}

}  // namespace causaldet::cli
