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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "causaldet/errors.h"
#include "causaldet/io.h"
#include "causaldet/version.h"
#include "commands.h"

using namespace causaldet;
using namespace causaldet::cli;

namespace {

void add_output(CLI::App *cmd, RunConfig &config) {
    cmd->add_option("--out", config.out, "Output file (default: stdout)");
    cmd->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}));
    cmd->add_option("--seed", config.seed, "Master seed")->capture_default_str();
}

void add_sampling(CLI::App *cmd, RunConfig &config, bool exact_allowed) {
    cmd->add_option("--shots", config.shots,
                    exact_allowed ? "Shots per measurement setting; 0 computes exact values only"
                                  : "Shots per measurement setting")
        ->capture_default_str();
    cmd->add_option("--resamples", config.resamples, "Bootstrap resamples")->capture_default_str();
}

int write_output(const RunConfig &config, const std::string &text) {
    if (config.out.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(config.out, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << config.out << "'\n";
        return kFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Causal determinant toolkit for two-qubit causal inference", "causaldet"};
    app.set_version_flag("--version", CAUSALDET_VERSION);
    app.require_subcommand(1);

    RunConfig config;

    auto *exact = app.add_subcommand("exact", "Exact correlation matrix and causal determinant of a scenario");
    exact->add_option("--scenario", config.scenario, "Scenario JSON file or inline JSON")->required();
    add_output(exact, config);

    auto *simulate = app.add_subcommand("simulate", "Finite-shot experiment with bootstrap interval");
    simulate->add_option("--scenario", config.scenario, "Scenario JSON file or inline JSON")->required();
    add_sampling(simulate, config, false);
    add_output(simulate, config);

    auto *werner = app.add_subcommand("sweep-werner", "Causal determinant along the Werner family");
    werner->add_option("--omega-min", config.omega_min)->capture_default_str();
    werner->add_option("--omega-max", config.omega_max)->capture_default_str();
    werner->add_option("--omega-steps", config.omega_steps)->capture_default_str();
    werner->add_option("--depolarize", config.depolarize, "Global depolarizing strength")->capture_default_str();
    add_sampling(werner, config, true);
    add_output(werner, config);

    auto *haar = app.add_subcommand("sweep-haar", "Causal determinant of Haar-random unitary channels");
    haar->add_option("--count", config.count, "Number of unitaries")->capture_default_str();
    add_sampling(haar, config, true);
    add_output(haar, config);

    auto *bounds = app.add_subcommand("bounds", "Boundary curves of the causal determinant against p");
    bounds->add_option("--ndc", config.ndc, "Class 1, 2, >=3 or all (default all)");
    bounds->add_option("--p-steps", config.p_steps, "Grid points in [0, 1]")->capture_default_str();
    bounds->add_option("--restarts", config.restarts, "Optimizer restarts per grid point")->capture_default_str();
    add_output(bounds, config);

    auto *infer = app.add_subcommand("infer", "Causal conclusions from a determinant or from count data");
    infer->add_option("--delta", config.delta, "Observed causal determinant");
    infer->add_option("--from", config.from, "ExperimentData JSON (e.g. simulate output)");
    infer->add_option("--ndc", config.ndc, "Restrict p ranges to one class (needs --bounds)");
    infer->add_option("--bounds", config.bounds, "Boundary table from 'bounds' (JSON or CSV)");
    infer->add_option("--resamples", config.resamples, "Bootstrap resamples for --from")->capture_default_str();
    add_output(infer, config);

    auto *fill = app.add_subcommand("fill-regions", "Random mixtures of one class across p");
    fill->add_option("--ndc", config.ndc, "Class 1, 2 or >=3")->capture_default_str();
    fill->add_option("--count", config.count, "Samples per grid point")->capture_default_str();
    fill->add_option("--p-steps", config.p_steps, "Grid points in [0, 1]")->capture_default_str();
    fill->add_option("--bounds", config.bounds, "Boundary table to check the points against");
    add_sampling(fill, config, true);
    add_output(fill, config);

    // Per-command defaults that differ from RunConfig.
    config.count = 15;
    fill->preparse_callback([&](size_t) {
        config.count = 10;
        config.p_steps = 11;
        config.shots = 0;
        config.ndc = "1";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }
    CLI::App *chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    config.seed_given = chosen->count("--seed") > 0;

    try {
        return write_output(config, run(config));
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DataError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PhysicalityError &e) {
        std::cerr << "error: unphysical input: " << e.what() << "\n";
        return kUnphysical;
    } catch (const MissingArtifact &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMissingArtifact;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
