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

#include "causaldet/io.h"

#include <gtest/gtest.h>

#include "causaldet/errors.h"

using namespace causaldet;

namespace {

json parse(const std::string &text) {
    return parse_json_text(text);
}

template <typename F>
std::string parse_error_path(F &&f) {
    try {
        f();
    } catch (const ParseError &e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST(io, malformed_json_reports_position) {
    try {
        parse_json_text("{\n  \"type\": \"direct\",\n  oops\n}", "scenario.json");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("scenario.json:3:"), std::string::npos) << e.what();
    }
}

TEST(io, scenario_forms) {
    CausalScenario s = scenario_from_json(parse(R"({"type":"common","state":{"type":"bell","index":3}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), -1, 1e-15);

    s = scenario_from_json(parse(R"({"type":"common","state":{"type":"werner","omega":0.5}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), -0.125, 1e-15);

    s = scenario_from_json(parse(R"({"type":"common","state":{"type":"bell","index":3,"depolarize":0.1}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), -0.729, 1e-12);

    s = scenario_from_json(parse(R"({"type":"direct","channel":{"type":"haar","seed":7}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), 1, 1e-12);

    s = scenario_from_json(parse(R"({"type":"direct","channel":{"axis":[0,0,1],"angle":1.2}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), 1, 1e-12);

    s = scenario_from_json(parse(R"({"type":"direct","channel":{"type":"mixed","terms":[
        {"weight":0.5,"unitary":{"re":[[1,0],[0,1]]}},
        {"weight":0.5,"unitary":{"re":[[0,1],[1,0]]}}]},"input":{"bloch":[0,0,1]}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), 0, 1e-15);

    s = scenario_from_json(parse(R"({"type":"mixture","p":0.5,"channel":{"type":"unitary","axis":[1,0,0],"angle":0},
        "state":{"type":"bloch","M":[[-1,0,0],[0,-1,0],[0,0,-1]]}})"));
    EXPECT_NEAR(exact_correlation(s).delta(), 0, 1e-15);
}

TEST(io, structural_errors_name_the_field) {
    EXPECT_EQ(parse_error_path([] {
                  scenario_from_json(parse(R"({"type":"common","state":{"type":"bell","index":3,"colour":1}})"));
              }),
              "/state/colour");
    EXPECT_EQ(parse_error_path([] {
                  scenario_from_json(parse(R"({"type":"common"})"));
              }),
              "/");
    EXPECT_EQ(parse_error_path([] {
                  scenario_from_json(parse(R"({"type":"mixture","p":"half","channel":{},"state":{}})"));
              }),
              "/p");
    EXPECT_EQ(parse_error_path([] {
                  scenario_from_json(parse(R"({"type":"sideways"})"));
              }),
              "/type");
    EXPECT_EQ(parse_error_path([] {
                  scenario_from_json(parse(R"({"type":"direct","channel":{"type":"mixed","terms":[{"weight":1}]}})"));
              }),
              "/channel/terms/0");
    EXPECT_EQ(parse_error_path([] {
                  state_from_json(parse(R"({"type":"bell","index":4})"));
              }),
              "/index");
}

TEST(io, unphysical_values_are_physicality_errors) {
    EXPECT_THROW(scenario_from_json(parse(R"({"type":"mixture","p":1.5,"channel":{"axis":[0,0,1],"angle":0},
        "state":{"type":"bell","index":0}})")),
                 PhysicalityError);
    EXPECT_THROW(unitary_from_json(parse(R"({"re":[[1,0],[0,2]]})")), PhysicalityError);
    EXPECT_THROW(state_from_json(parse(R"({"type":"bloch","M":[[1,0,0],[0,1,0],[0,0,1]]})")), PhysicalityError);
    EXPECT_THROW(state_from_json(parse(R"({"type":"werner","omega":-0.5})")), PhysicalityError);
    EXPECT_THROW(channel_from_json(parse(R"({"type":"mixed","terms":[{"weight":0.5,"unitary":{"re":[[1,0],[0,1]]}}]})")),
                 PhysicalityError);
    EXPECT_THROW(qubit_state_from_json(parse(R"({"bloch":[1,1,0]})")), PhysicalityError);
}

TEST(io, scenario_round_trip) {
    Rng rng(3);
    for (int trial = 0; trial < 20; trial++) {
        auto channel = MixedUnitaryChannel::create({{0.25, haar_random_unitary(rng)}, {0.75, haar_random_unitary(rng)}});
        CausalScenario original = Mixture(rng.uniform(), channel, random_state(rng));
        CausalScenario back = scenario_from_json(parse(to_json(original).dump()));
        EXPECT_LT(max_abs_diff(exact_correlation(back).c(), exact_correlation(original).c()), 1e-12);
    }
}

TEST(io, experiment_data_round_trip) {
    CausalScenario s = CommonCause{bell_state(3)};
    ExperimentData data = run_experiment(s, 1000, 4, to_json(s).dump());
    ExperimentData back = experiment_data_from_json(parse(to_json(data).dump()));
    EXPECT_EQ(back.records, data.records);
    EXPECT_EQ(back.shots_per_setting, 1000u);
    EXPECT_EQ(back.seed, 4u);
    EXPECT_EQ(estimate_correlation(back).c.delta(), estimate_correlation(data).c.delta());
}

TEST(io, experiment_data_validation) {
    json j = to_json(run_experiment(CommonCause{bell_state(0)}, 10, 1));
    j.erase("scenario");
    j["lab"] = "bench 4";
    EXPECT_NO_THROW(experiment_data_from_json(j));

    json duplicate = j;
    duplicate["records"][1]["k"] = 1;
    EXPECT_EQ(parse_error_path([&] {
                  experiment_data_from_json(duplicate);
              }),
              "/records/1");

    json negative = j;
    negative["records"][2]["npm"] = -3;
    EXPECT_EQ(parse_error_path([&] {
                  experiment_data_from_json(negative);
              }),
              "/records/2/npm");

    json short_list = j;
    short_list["records"].erase(8);
    EXPECT_THROW(experiment_data_from_json(short_list), ParseError);

    json bad_axis = j;
    bad_axis["records"][0]["j"] = 4;
    EXPECT_THROW(experiment_data_from_json(bad_axis), ParseError);
}

TEST(io, boundary_tables_round_trip) {
    BoundaryTable a;
    a.ndc = NdcClass::Two;
    a.p_grid = {0, 0.5, 1};
    a.lower = {-1, -0.25, 0};
    a.upper = {1.0 / 27, 0.2962962962962963, 1};
    a.restarts = 8;
    a.seed = 3;
    BoundaryTable b = a;
    b.ndc = NdcClass::ThreeOrMore;

    auto from_json = boundary_tables_from_json(parse(json{{"tables", {to_json(a), to_json(b)}}}.dump()));
    ASSERT_EQ(from_json.size(), 2u);
    EXPECT_EQ(from_json[0].upper, a.upper);
    EXPECT_EQ(from_json[1].ndc, NdcClass::ThreeOrMore);
    EXPECT_EQ(from_json[0].restarts, 8);

    auto single = boundary_tables_from_json(parse(to_json(a).dump()));
    ASSERT_EQ(single.size(), 1u);

    std::string csv = boundary_tables_to_csv({a, b});
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,lower,upper,ndc_class");
    auto from_csv = boundary_tables_from_csv(csv);
    ASSERT_EQ(from_csv.size(), 2u);
    EXPECT_EQ(from_csv[0].upper, a.upper);
    EXPECT_EQ(from_csv[0].lower, a.lower);
    EXPECT_EQ(from_csv[1].p_grid, b.p_grid);
}

TEST(io, boundary_table_errors) {
    EXPECT_THROW(boundary_tables_from_csv("x,y\n"), ParseError);
    EXPECT_THROW(boundary_tables_from_csv("p,lower,upper,ndc_class\n0,0,1\n"), ParseError);
    EXPECT_THROW(boundary_tables_from_csv("p,lower,upper,ndc_class\n0,a,1,2\n1,0,1,2\n"), ParseError);
    EXPECT_THROW(boundary_tables_from_csv("p,lower,upper,ndc_class\n0,0,1,7\n1,0,1,7\n"), ParseError);
    EXPECT_THROW(boundary_tables_from_csv("p,lower,upper,ndc_class\n0,2,1,2\n1,0,1,2\n"), ParseError);
    EXPECT_EQ(parse_error_path([] {
                  boundary_tables_from_json(parse(R"({"tables":[{"ndc_class":"4","p":[0,1],"lower":[0,0],"upper":[1,1]}]})"));
              }),
              "/tables/0/ndc_class");
}

TEST(io, report_serialization) {
    BoundaryTable t;
    t.ndc = NdcClass::One;
    t.p_grid = {0, 1};
    t.lower = {-1, 1};
    t.upper = {1.0 / 27, 1};
    json j = to_json(infer(-0.5, Interval{-0.6, -0.4}, {t}));
    EXPECT_EQ(j["common_cause_present"], "yes");
    EXPECT_EQ(j["direct_cause_present"], "undetermined");
    EXPECT_EQ(j["ndc_min_pure_dc"], "not pure DC possible");
    EXPECT_EQ(j["ci"][0], -0.6);
    EXPECT_EQ(j["thresholds"]["direct_cause_above"], 1.0 / 27);
    EXPECT_TRUE(j["p_feasible"]["1"].is_object());

    j = to_json(infer(0.5, std::nullopt, {t}));
    EXPECT_TRUE(j["ci"].is_null());
    EXPECT_EQ(j["ndc_min_pure_dc"], 2);
    t.upper = {0.1, 0.2};
    t.lower = {0.0, 0.1};
    EXPECT_EQ(to_json(infer(0.5, std::nullopt, {t}))["p_feasible"]["1"], "infeasible");
}

TEST(io, format_double_reads_back_exactly) {
    for (double v : {0.1, 1.0 / 3, -1e-300, 123456789.125, 0.0}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
}
