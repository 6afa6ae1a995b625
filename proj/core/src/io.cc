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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "causaldet/errors.h"
#include "causaldet/qcore.h"

namespace causaldet {

namespace {

constexpr uint64_t kHaarChannelStream = 0x4AA5;

std::string child(const std::string &path, const std::string &key) {
    return path + "/" + key;
}

std::string child(const std::string &path, size_t index) {
    return path + "/" + std::to_string(index);
}

std::string location(const std::string &path) {
    return path.empty() ? "/" : path;
}

void expect_object(const json &j, const std::string &path, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) {
        throw ParseError(location(path), "expected an object");
    }
    for (const auto &item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char *name) {
            return item.key() == name;
        });
        if (!known) {
            throw ParseError(child(path, item.key()), "unknown field '" + item.key() + "'");
        }
    }
}

const json &field(const json &j, const std::string &path, const char *key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(location(path), std::string("missing field '") + key + "'");
    }
    return *it;
}

double number(const json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ParseError(location(path), "expected a number");
    }
    return j.get<double>();
}

int64_t integer(const json &j, const std::string &path) {
    if (!j.is_number_integer()) {
        throw ParseError(location(path), "expected an integer");
    }
    return j.get<int64_t>();
}

uint64_t unsigned_integer(const json &j, const std::string &path) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<int64_t>() < 0)) {
        throw ParseError(location(path), "expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

std::string string_field(const json &j, const std::string &path) {
    if (!j.is_string()) {
        throw ParseError(location(path), "expected a string");
    }
    return j.get<std::string>();
}

std::vector<double> numbers(const json &j, const std::string &path, size_t expected) {
    if (!j.is_array() || (expected != 0 && j.size() != expected)) {
        throw ParseError(location(path), expected != 0 ? "expected an array of " + std::to_string(expected) + " numbers"
                                                       : "expected an array of numbers");
    }
    std::vector<double> out;
    for (size_t i = 0; i < j.size(); i++) {
        out.push_back(number(j[i], child(path, i)));
    }
    return out;
}

Vec3 vec3(const json &j, const std::string &path) {
    auto v = numbers(j, path, 3);
    return {v[0], v[1], v[2]};
}

template <size_t N>
std::vector<std::vector<double>> square(const json &j, const std::string &path) {
    if (!j.is_array() || j.size() != N) {
        throw ParseError(location(path), "expected a " + std::to_string(N) + "x" + std::to_string(N) + " array");
    }
    std::vector<std::vector<double>> rows;
    for (size_t r = 0; r < N; r++) {
        rows.push_back(numbers(j[r], child(path, r), N));
    }
    return rows;
}

template <size_t N>
CMatrix<N> complex_matrix(const json &j, const std::string &path) {
    auto re = square<N>(field(j, path, "re"), child(path, "re"));
    std::vector<std::vector<double>> im(N, std::vector<double>(N, 0.0));
    if (j.contains("im")) {
        im = square<N>(j["im"], child(path, "im"));
    }
    CMatrix<N> m;
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            m(r, c) = Complex(re[r][c], im[r][c]);
        }
    }
    return m;
}

Real3 real3(const json &j, const std::string &path) {
    auto rows = square<3>(j, path);
    Real3 m;
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

/// Re-throws argument errors from the core as physicality errors located at path.
template <typename F>
auto physical(const std::string &path, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const PhysicalityError &e) {
        throw PhysicalityError(location(path) + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw PhysicalityError(location(path) + ": " + e.what());
    }
}

template <size_t N>
json complex_to_json(const CMatrix<N> &m) {
    json re = json::array();
    json im = json::array();
    for (size_t r = 0; r < N; r++) {
        json re_row = json::array();
        json im_row = json::array();
        for (size_t c = 0; c < N; c++) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return {{"re", re}, {"im", im}};
}

json vec_to_json(const Vec3 &v) {
    return json::array({v[0], v[1], v[2]});
}

std::optional<NdcClass> ndc_from_json(const json &j, const std::string &path) {
    if (j.is_string()) {
        try {
            return parse_ndc_class(j.get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw ParseError(location(path), e.what());
        }
    }
    if (j.is_number_integer()) {
        try {
            return parse_ndc_class(std::to_string(j.get<int64_t>()));
        } catch (const std::invalid_argument &e) {
            throw ParseError(location(path), e.what());
        }
    }
    throw ParseError(location(path), "expected an ndc class (1, 2 or \">=3\")");
}

}  // namespace

json parse_json_text(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        // The library reports the byte offset; convert to line and column.
        size_t offset = std::min<size_t>(e.byte, text.size());
        size_t line = 1;
        size_t column = 1;
        for (size_t i = 0; i + 1 < offset; i++) {
            if (text[i] == '\n') {
                line++;
                column = 1;
            } else {
                column++;
            }
        }
        throw ParseError("", source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                 ": malformed JSON (" + e.what() + ")");
    }
}

Unitary2 unitary_from_json(const json &j, const std::string &path) {
    if (j.is_object() && j.contains("axis")) {
        expect_object(j, path, {"axis", "angle"});
        Vec3 axis = vec3(field(j, path, "axis"), child(path, "axis"));
        double angle = number(field(j, path, "angle"), child(path, "angle"));
        return physical(path, [&] {
            return Unitary2::from_axis_angle(axis, angle);
        });
    }
    expect_object(j, path, {"re", "im"});
    Mat2 m = complex_matrix<2>(j, path);
    return physical(path, [&] {
        return Unitary2::from_matrix(m);
    });
}

QubitState qubit_state_from_json(const json &j, const std::string &path) {
    if (j.is_object() && j.contains("bloch")) {
        expect_object(j, path, {"bloch"});
        Vec3 r = vec3(j["bloch"], child(path, "bloch"));
        return physical(path, [&] {
            return QubitState::from_bloch(r);
        });
    }
    expect_object(j, path, {"re", "im"});
    Mat2 m = complex_matrix<2>(j, path);
    return physical(path, [&] {
        return QubitState::from_density(m);
    });
}

TwoQubitState state_from_json(const json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ParseError(location(path), "expected an object");
    }
    std::string type = string_field(field(j, path, "type"), child(path, "type"));
    std::optional<TwoQubitState> state;
    if (type == "bell") {
        expect_object(j, path, {"type", "index", "depolarize"});
        int64_t index = integer(field(j, path, "index"), child(path, "index"));
        if (index < 0 || index > 3) {
            throw ParseError(child(path, "index"), "Bell index must be 0..3");
        }
        state = bell_state(static_cast<int>(index));
    } else if (type == "werner") {
        expect_object(j, path, {"type", "omega", "depolarize"});
        double omega = number(field(j, path, "omega"), child(path, "omega"));
        state = physical(path, [&] {
            return werner_state(omega);
        });
    } else if (type == "bloch") {
        expect_object(j, path, {"type", "vA", "vB", "M", "depolarize"});
        BlochForm form;
        if (j.contains("vA")) {
            form.v_a = vec3(j["vA"], child(path, "vA"));
        }
        if (j.contains("vB")) {
            form.v_b = vec3(j["vB"], child(path, "vB"));
        }
        form.m = real3(field(j, path, "M"), child(path, "M"));
        state = physical(path, [&] {
            return bloch_compose(form);
        });
    } else if (type == "dense") {
        expect_object(j, path, {"type", "re", "im", "depolarize"});
        Mat4 m = complex_matrix<4>(j, path);
        state = physical(path, [&] {
            return TwoQubitState::from_density(m);
        });
    } else {
        throw ParseError(child(path, "type"), "unknown state type '" + type + "'");
    }
    if (j.contains("depolarize")) {
        double eps = number(j["depolarize"], child(path, "depolarize"));
        state = physical(child(path, "depolarize"), [&] {
            return depolarize(*state, eps);
        });
    }
    return *state;
}

MixedUnitaryChannel channel_from_json(const json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ParseError(location(path), "expected an object");
    }
    if (!j.contains("type") && j.contains("axis")) {
        return MixedUnitaryChannel::single(unitary_from_json(j, path));
    }
    std::string type = string_field(field(j, path, "type"), child(path, "type"));
    if (type == "unitary") {
        if (j.contains("axis")) {
            expect_object(j, path, {"type", "axis", "angle"});
            json shorthand = {{"axis", j["axis"]}, {"angle", field(j, path, "angle")}};
            return MixedUnitaryChannel::single(unitary_from_json(shorthand, path));
        }
        expect_object(j, path, {"type", "matrix"});
        return MixedUnitaryChannel::single(unitary_from_json(field(j, path, "matrix"), child(path, "matrix")));
    }
    if (type == "haar") {
        expect_object(j, path, {"type", "seed"});
        Rng rng(unsigned_integer(field(j, path, "seed"), child(path, "seed")), kHaarChannelStream);
        return MixedUnitaryChannel::single(haar_random_unitary(rng));
    }
    if (type == "mixed") {
        expect_object(j, path, {"type", "terms"});
        const json &terms = field(j, path, "terms");
        std::string terms_path = child(path, "terms");
        if (!terms.is_array()) {
            throw ParseError(terms_path, "expected an array of terms");
        }
        std::vector<MixedUnitaryChannel::Term> parsed;
        for (size_t i = 0; i < terms.size(); i++) {
            std::string term_path = child(terms_path, i);
            expect_object(terms[i], term_path, {"weight", "unitary"});
            double weight = number(field(terms[i], term_path, "weight"), child(term_path, "weight"));
            parsed.push_back({weight, unitary_from_json(field(terms[i], term_path, "unitary"), child(term_path, "unitary"))});
        }
        return physical(path, [&] {
            return MixedUnitaryChannel::create(std::move(parsed));
        });
    }
    throw ParseError(child(path, "type"), "unknown channel type '" + type + "'");
}

CausalScenario scenario_from_json(const json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ParseError(location(path), "expected an object");
    }
    std::string type = string_field(field(j, path, "type"), child(path, "type"));
    auto input_of = [&]() {
        return j.contains("input") ? qubit_state_from_json(j["input"], child(path, "input"))
                                   : QubitState::maximally_mixed();
    };
    if (type == "direct") {
        expect_object(j, path, {"type", "channel", "input"});
        return DirectCause{channel_from_json(field(j, path, "channel"), child(path, "channel")), input_of()};
    }
    if (type == "common") {
        expect_object(j, path, {"type", "state"});
        return CommonCause{state_from_json(field(j, path, "state"), child(path, "state"))};
    }
    if (type == "mixture") {
        expect_object(j, path, {"type", "p", "channel", "state", "input"});
        double p = number(field(j, path, "p"), child(path, "p"));
        auto channel = channel_from_json(field(j, path, "channel"), child(path, "channel"));
        auto state = state_from_json(field(j, path, "state"), child(path, "state"));
        auto input = input_of();
        return physical(child(path, "p"), [&] {
            return Mixture(p, channel, state, input);
        });
    }
    throw ParseError(child(path, "type"), "unknown scenario type '" + type + "'");
}

ExperimentData experiment_data_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("/", "expected an object");
    }
    ExperimentData data;
    if (j.contains("shots")) {
        data.shots_per_setting = unsigned_integer(j["shots"], "/shots");
    }
    if (j.contains("seed")) {
        data.seed = unsigned_integer(j["seed"], "/seed");
    }
    if (j.contains("scenario") && !j["scenario"].is_null()) {
        // Validate the echo so that provenance is never silently wrong.
        scenario_from_json(j["scenario"], "/scenario");
        data.scenario_descriptor = j["scenario"].dump();
    }
    const json &records = field(j, "", "records");
    if (!records.is_array() || records.size() != 9) {
        throw ParseError("/records", "expected exactly nine records");
    }
    std::array<bool, 9> seen{};
    for (size_t i = 0; i < records.size(); i++) {
        std::string path = child("/records", i);
        const json &r = records[i];
        expect_object(r, path, {"j", "k", "npp", "npm", "nmp", "nmm"});
        int64_t jj = integer(field(r, path, "j"), child(path, "j"));
        int64_t kk = integer(field(r, path, "k"), child(path, "k"));
        if (jj < 1 || jj > 3 || kk < 1 || kk > 3) {
            throw ParseError(path, "setting axes must be 1, 2 or 3");
        }
        size_t slot = static_cast<size_t>(3 * (jj - 1) + (kk - 1));
        if (seen[slot]) {
            throw ParseError(path, "duplicate setting");
        }
        seen[slot] = true;
        ShotCounts &counts = data.records[slot];
        counts.j = static_cast<int>(jj);
        counts.k = static_cast<int>(kk);
        counts.npp = unsigned_integer(field(r, path, "npp"), child(path, "npp"));
        counts.npm = unsigned_integer(field(r, path, "npm"), child(path, "npm"));
        counts.nmp = unsigned_integer(field(r, path, "nmp"), child(path, "nmp"));
        counts.nmm = unsigned_integer(field(r, path, "nmm"), child(path, "nmm"));
    }
    return data;
}

BoundaryTable boundary_table_from_json(const json &j, const std::string &path) {
    expect_object(j, path, {"ndc_class", "p", "lower", "upper", "restarts", "max_iterations", "tolerance", "seed"});
    BoundaryTable table;
    table.ndc = *ndc_from_json(field(j, path, "ndc_class"), child(path, "ndc_class"));
    table.p_grid = numbers(field(j, path, "p"), child(path, "p"), 0);
    table.lower = numbers(field(j, path, "lower"), child(path, "lower"), 0);
    table.upper = numbers(field(j, path, "upper"), child(path, "upper"), 0);
    if (j.contains("restarts")) {
        table.restarts = static_cast<int>(integer(j["restarts"], child(path, "restarts")));
    }
    if (j.contains("max_iterations")) {
        table.max_iterations = static_cast<int>(integer(j["max_iterations"], child(path, "max_iterations")));
    }
    if (j.contains("tolerance")) {
        table.tolerance = number(j["tolerance"], child(path, "tolerance"));
    }
    if (j.contains("seed")) {
        table.seed = unsigned_integer(j["seed"], child(path, "seed"));
    }
    try {
        validate_table(table);
    } catch (const std::invalid_argument &e) {
        throw ParseError(location(path), e.what());
    }
    return table;
}

std::vector<BoundaryTable> boundary_tables_from_json(const json &j) {
    if (j.is_object() && j.contains("tables")) {
        const json &tables = j["tables"];
        if (!tables.is_array()) {
            throw ParseError("/tables", "expected an array");
        }
        std::vector<BoundaryTable> out;
        for (size_t i = 0; i < tables.size(); i++) {
            out.push_back(boundary_table_from_json(tables[i], child("/tables", i)));
        }
        return out;
    }
    return {boundary_table_from_json(j)};
}

std::vector<BoundaryTable> boundary_tables_from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("p,lower,upper,ndc_class", 0) != 0) {
        throw ParseError("line 1", "expected CSV header 'p,lower,upper,ndc_class'");
    }
    std::map<NdcClass, BoundaryTable> tables;
    size_t line_number = 1;
    while (std::getline(in, line)) {
        line_number++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            cells.push_back(cell);
        }
        std::string where = "line " + std::to_string(line_number);
        if (cells.size() != 4) {
            throw ParseError(where, "expected 4 columns");
        }
        std::array<double, 3> values{};
        for (size_t c = 0; c < 3; c++) {
            const std::string &s = cells[c];
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), values[c]);
            if (ec != std::errc() || ptr != s.data() + s.size()) {
                throw ParseError(where, "column " + std::to_string(c + 1) + " is not a number");
            }
        }
        NdcClass ndc;
        try {
            ndc = parse_ndc_class(cells[3]);
        } catch (const std::invalid_argument &e) {
            throw ParseError(where, e.what());
        }
        auto &table = tables[ndc];
        table.ndc = ndc;
        table.p_grid.push_back(values[0]);
        table.lower.push_back(values[1]);
        table.upper.push_back(values[2]);
    }
    std::vector<BoundaryTable> out;
    for (auto &[ndc, table] : tables) {
        try {
            validate_table(table);
        } catch (const std::invalid_argument &e) {
            throw ParseError("ndc_class " + to_string(ndc), e.what());
        }
        out.push_back(std::move(table));
    }
    return out;
}

json to_json(const Real3 &m) {
    json rows = json::array();
    for (size_t r = 0; r < 3; r++) {
        rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2)}));
    }
    return rows;
}

json to_json(const Mat2 &m) {
    return complex_to_json(m);
}

json to_json(const Mat4 &m) {
    return complex_to_json(m);
}

json to_json(const Unitary2 &u) {
    return complex_to_json(u.matrix());
}

json to_json(const MixedUnitaryChannel &channel) {
    if (channel.size() == 1 && channel.terms()[0].weight == 1.0) {
        return {{"type", "unitary"}, {"matrix", to_json(channel.terms()[0].unitary)}};
    }
    json terms = json::array();
    for (const auto &term : channel.terms()) {
        terms.push_back({{"weight", term.weight}, {"unitary", to_json(term.unitary)}});
    }
    return {{"type", "mixed"}, {"terms", terms}};
}

json to_json(const TwoQubitState &state) {
    json j = complex_to_json(state.rho());
    j["type"] = "dense";
    return j;
}

json to_json(const CausalScenario &scenario) {
    struct Visitor {
        json operator()(const DirectCause &dc) const {
            return {{"type", "direct"}, {"channel", to_json(dc.channel)}, {"input", {{"bloch", vec_to_json(dc.input.bloch())}}}};
        }
        json operator()(const CommonCause &cc) const {
            return {{"type", "common"}, {"state", to_json(cc.state)}};
        }
        json operator()(const Mixture &mix) const {
            return {{"type", "mixture"},
                    {"p", mix.p()},
                    {"channel", to_json(mix.channel())},
                    {"state", to_json(mix.state())},
                    {"input", {{"bloch", vec_to_json(mix.input().bloch())}}}};
        }
    };
    return std::visit(Visitor{}, scenario);
}

json to_json(const CorrelationMatrix &c) {
    return {{"C", to_json(c.c())}, {"delta", c.delta()}};
}

json to_json(const ExperimentData &data) {
    json records = json::array();
    for (const auto &r : data.records) {
        records.push_back({{"j", r.j}, {"k", r.k}, {"npp", r.npp}, {"npm", r.npm}, {"nmp", r.nmp}, {"nmm", r.nmm}});
    }
    json scenario = data.scenario_descriptor.empty() ? json(nullptr) : json::parse(data.scenario_descriptor);
    return {{"scenario", scenario}, {"shots", data.shots_per_setting}, {"seed", data.seed}, {"records", records}};
}

json to_json(const BoundaryTable &table) {
    return {{"ndc_class", to_string(table.ndc)},
            {"p", table.p_grid},
            {"lower", table.lower},
            {"upper", table.upper},
            {"restarts", table.restarts},
            {"max_iterations", table.max_iterations},
            {"tolerance", table.tolerance},
            {"seed", table.seed}};
}

json to_json(const RangeInterval &range) {
    return {{"lo", range.lo}, {"hi", range.hi}, {"attained_lo", range.attained_lo}, {"attained_hi", range.attained_hi}};
}

json to_json(const InferenceReport &report) {
    json j;
    j["delta"] = report.delta;
    j["ci"] = report.ci ? json::array({report.ci->lo, report.ci->hi}) : json(nullptr);
    j["direct_cause_present"] = to_string(report.direct_cause_present);
    j["common_cause_present"] = to_string(report.common_cause_present);
    j["ndc_min_pure_dc"] = report.ndc_min_pure_dc ? json(*report.ndc_min_pure_dc) : json("not pure DC possible");
    j["direct_score"] = report.direct_score;
    json feasible = json::object();
    for (const auto &[ndc, range] : report.p_feasible) {
        if (range.range) {
            feasible[to_string(ndc)] = {{"lo", range.range->lo}, {"hi", range.range->hi}, {"resolution", range.resolution}};
        } else {
            feasible[to_string(ndc)] = "infeasible";
        }
    }
    j["p_feasible"] = feasible;
    j["thresholds"] = {{"direct_cause_above", CAUSAL_THRESHOLD}, {"common_cause_below", -CAUSAL_THRESHOLD}};
    return j;
}

std::string boundary_tables_to_csv(const std::vector<BoundaryTable> &tables) {
    std::string out = "p,lower,upper,ndc_class\n";
    for (const auto &table : tables) {
        for (size_t i = 0; i < table.p_grid.size(); i++) {
            out += format_double(table.p_grid[i]) + "," + format_double(table.lower[i]) + "," +
                   format_double(table.upper[i]) + "," + to_string(table.ndc) + "\n";
        }
    }
    return out;
}

std::string format_double(double v) {
    std::array<char, 64> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), v);
    return std::string(buffer.data(), ptr);
}

}  // namespace causaldet
