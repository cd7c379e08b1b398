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

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "qstack/qubo/model.hpp"

// QUBO text format:
//   {"n_vars": 3, "linear": {"0": -1.0}, "quadratic": {"0,2": 2.5}, "offset": 0.0}
namespace qstack::qubo {

/// Throws InputError naming the offending field.
QuboModel qubo_from_json(const nlohmann::json &doc);
nlohmann::json qubo_to_json(const QuboModel &model);

/// Parses `text`; JSON syntax errors become InputError with line/column.
QuboModel parse_qubo(const std::string &text);
QuboModel load_qubo_file(const std::filesystem::path &path);

/// Shared by the file loaders: read a whole file or throw InputError.
std::string read_text_file(const std::filesystem::path &path);

/// Parses JSON, converting syntax errors to InputError prefixed with `what`.
nlohmann::json parse_json_document(const std::string &text, const std::string &what);

} // namespace qstack::qubo
