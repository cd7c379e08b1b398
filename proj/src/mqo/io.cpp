// Copyright 2026 The qstack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qstack/mqo/io.hpp"

#include "qstack/common/error.hpp"
#include "qstack/qubo/io.hpp"

namespace qstack::mqo {

namespace {

using nlohmann::json;

const json &array_field(const json &doc, const char *name) {
    if (!doc.contains(name) || !doc[name].is_array()) {
        throw InputError(std::string("mqo: field '") + name + "' missing or not an array");
    }
    return doc[name];
}

int index_at(const json &value, const std::string &field) {
    if (!value.is_number_integer()) {
        throw InputError("mqo: field '" + field + "' must be an integer plan index");
    }
    return value.get<int>();
}

double number_at(const json &value, const std::string &field) {
    if (!value.is_number()) {
        throw InputError("mqo: field '" + field + "' must be a number");
    }
    return value.get<double>();
}

} // namespace

MqoProblem problem_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw InputError("mqo: document must be a JSON object");
    }
    MqoProblem problem;
    const auto &queries = array_field(doc, "queries");
    for (std::size_t q = 0; q < queries.size(); ++q) {
        const std::string field = "queries[" + std::to_string(q) + "]";
        if (!queries[q].is_array()) {
            throw InputError("mqo: field '" + field + "' must be an array of plan indices");
        }
        std::vector<int> plans;
        for (std::size_t k = 0; k < queries[q].size(); ++k) {
            plans.push_back(index_at(queries[q][k], field + "[" + std::to_string(k) + "]"));
        }
        problem.queries.push_back(std::move(plans));
    }
    const auto &costs = array_field(doc, "costs");
    for (std::size_t p = 0; p < costs.size(); ++p) {
        problem.costs.push_back(number_at(costs[p], "costs[" + std::to_string(p) + "]"));
    }
    if (doc.contains("savings")) {
        const auto &savings = array_field(doc, "savings");
        for (std::size_t s = 0; s < savings.size(); ++s) {
            const std::string field = "savings[" + std::to_string(s) + "]";
            if (!savings[s].is_array() || savings[s].size() != 3) {
                throw InputError("mqo: field '" + field + "' must be [i, j, amount]");
            }
            problem.savings.push_back({index_at(savings[s][0], field + "[0]"),
                                       index_at(savings[s][1], field + "[1]"),
                                       number_at(savings[s][2], field + "[2]")});
        }
    }
    try {
        problem.validate();
    } catch (const InstanceError &e) {
        throw InputError(e.what());
    }
    return problem;
}

json problem_to_json(const MqoProblem &problem) {
    json savings = json::array();
    for (const auto &s : problem.savings) {
        savings.push_back(json::array({s.i, s.j, s.amount}));
    }
    return json{{"queries", problem.queries}, {"costs", problem.costs}, {"savings", savings}};
}

MqoProblem parse_problem(const std::string &text) {
    return problem_from_json(qubo::parse_json_document(text, "mqo"));
}

MqoProblem load_problem_file(const std::filesystem::path &path) {
    return parse_problem(qubo::read_text_file(path));
}

} // namespace qstack::mqo
