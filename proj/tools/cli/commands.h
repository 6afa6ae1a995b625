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

#ifndef CAUSALDET_TOOLS_COMMANDS_H
#define CAUSALDET_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace causaldet::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kUnphysical = 3, kMissingArtifact = 4 };

/// A file the command depends on is absent or unreadable.
class MissingArtifact : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad flag values that CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct RunConfig {
    std::string command;
    std::string scenario;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    /// False when --seed was left at its default.
    bool seed_given = false;
    std::string out;
    Format format = Format::Json;
    int resamples = 1000;

    double omega_min = -1.0 / 3;
    double omega_max = 1;
    int omega_steps = 50;
    double depolarize = 0;

    int count = 15;
    std::string ndc;
    int p_steps = 101;
    int restarts = 64;

    std::optional<double> delta;
    std::string from;
    std::string bounds;
};

/// Runs the subcommand and returns the text to write.
std::string run(const RunConfig &config);

}  // namespace causaldet::cli

#endif
