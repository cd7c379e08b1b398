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

#include "qstack/qubo/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qstack/common/error.hpp"

namespace qstack::qubo {

namespace {

using nlohmann::json;

int parse_index(std::string_view text, const std::string &field) {
    int value = -1;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
        throw InputError("qubo: field '" + field + "' has non-index key '" + std::string(text) + "'");
    }
    return value;
}

double number_at(const json &value, const std::string &field) {
    if (!value.is_number()) {
        throw InputError("qubo: field '" + field + "' must be a number");
    }
    return value.get<double>();
}

} // namespace

QuboModel qubo_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw InputError("qubo: document must be a JSON object");
    }
    if (!doc.contains("n_vars") || !doc["n_vars"].is_number_integer()) {
        throw InputError("qubo: field 'n_vars' missing or not an integer");
    }
    QuboModel model(doc["n_vars"].get<int>());
    if (model.n_vars < 1) {
        throw InputError("qubo: field 'n_vars' must be positive");
    }
    if (doc.contains("linear")) {
        if (!doc["linear"].is_object()) {
            throw InputError("qubo: field 'linear' must be an object");
        }
        for (const auto &[key, value] : doc["linear"].items()) {
            const std::string field = "linear." + key;
            const int i = parse_index(key, "linear");
            if (i >= model.n_vars) {
                throw InputError("qubo: field '" + field + "' index out of range");
            }
            model.add_linear(i, number_at(value, field));
        }
    }
    if (doc.contains("quadratic")) {
        if (!doc["quadratic"].is_object()) {
            throw InputError("qubo: field 'quadratic' must be an object");
        }
        for (const auto &[key, value] : doc["quadratic"].items()) {
            const std::string field = "quadratic." + key;
            const auto comma = key.find(',');
            if (comma == std::string::npos) {
                throw InputError("qubo: field '" + field + "' key must look like 'i,j'");
            }
            const int i = parse_index(std::string_view(key).substr(0, comma), "quadratic");
            const int j = parse_index(std::string_view(key).substr(comma + 1), "quadratic");
            if (i >= j || j >= model.n_vars) {
                throw InputError("qubo: field '" + field + "' needs 0 <= i < j < n_vars");
            }
            model.add_quadratic(i, j, number_at(value, field));
        }
    }
    if (doc.contains("offset")) {
        model.offset = number_at(doc["offset"], "offset");
    }
    try {
        model.validate();
    } catch (const ConfigError &e) {
        throw InputError(e.what());
    }
    return model;
}

json qubo_to_json(const QuboModel &model) {
    json linear = json::object();
    for (const auto &[i, c] : model.linear) {
        linear[std::to_string(i)] = c;
    }
    json quadratic = json::object();
    for (const auto &[key, c] : model.quadratic) {
        quadratic[std::to_string(key.first) + "," + std::to_string(key.second)] = c;
    }
    return json{{"n_vars", model.n_vars},
                {"linear", linear},
                {"quadratic", quadratic},
                {"offset", model.offset}};
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json_document(const std::string &text, const std::string &what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        // nlohmann reports "... at line L, column C: ..." in e.what().
        throw InputError(what + ": malformed JSON: " + e.what());
    }
}

QuboModel parse_qubo(const std::string &text) { return qubo_from_json(parse_json_document(text, "qubo")); }

QuboModel load_qubo_file(const std::filesystem::path &path) {
    return parse_qubo(read_text_file(path));
}

} // namespace qstack::qubo
