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

#ifndef CAUSALDET_IO_H
#define CAUSALDET_IO_H

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "causaldet/bounds.h"
#include "causaldet/infer.h"
#include "causaldet/sampler.h"
#include "causaldet/scenario.h"

namespace causaldet {

using nlohmann::json;

/// Structurally invalid input: bad JSON, a missing or unknown field, a wrong
/// type. The message names the offending location as a JSON pointer.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &path, const std::string &what)
        : std::runtime_error(path.empty() ? what : path + ": " + what), path_(path) {
    }
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

/// Parses text, reporting syntax errors with line and column.
json parse_json_text(const std::string &text, const std::string &source = "input");

// Readers. Field and type problems throw ParseError; well-formed but
// unphysical values (negative eigenvalues, non-unitary matrices, weights
// that do not sum to one, probabilities outside [0, 1]) throw PhysicalityError.
Unitary2 unitary_from_json(const json &j, const std::string &path = "");
QubitState qubit_state_from_json(const json &j, const std::string &path = "");
TwoQubitState state_from_json(const json &j, const std::string &path = "");
MixedUnitaryChannel channel_from_json(const json &j, const std::string &path = "");
CausalScenario scenario_from_json(const json &j, const std::string &path = "");
/// Accepts the simulate output as well as bare count files; the scenario
/// echo and extra top-level fields are optional.
ExperimentData experiment_data_from_json(const json &j);
BoundaryTable boundary_table_from_json(const json &j, const std::string &path = "");
/// A single table object or an object with a "tables" array.
std::vector<BoundaryTable> boundary_tables_from_json(const json &j);
std::vector<BoundaryTable> boundary_tables_from_csv(const std::string &text);

// Writers.
json to_json(const Real3 &m);
json to_json(const Mat2 &m);
json to_json(const Mat4 &m);
json to_json(const Unitary2 &u);
json to_json(const MixedUnitaryChannel &channel);
json to_json(const TwoQubitState &state);
json to_json(const CausalScenario &scenario);
json to_json(const CorrelationMatrix &c);
json to_json(const ExperimentData &data);
json to_json(const BoundaryTable &table);
json to_json(const RangeInterval &range);
json to_json(const InferenceReport &report);

/// CSV with header "p,lower,upper,ndc_class".
std::string boundary_tables_to_csv(const std::vector<BoundaryTable> &tables);

/// Shortest decimal text that reads back to the same double; locale independent.
std::string format_double(double v);

}  // namespace causaldet

#endif
