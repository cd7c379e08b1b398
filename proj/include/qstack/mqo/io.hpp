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

#include "qstack/mqo/problem.hpp"

// Instance file:
//   {"queries": [[0, 1], [2, 3]], "costs": [1, 2, 3, 4], "savings": [[0, 2, 0.5]]}
namespace qstack::mqo {

/// Throws InputError naming the offending field, e.g. "savings[1][2]".
MqoProblem problem_from_json(const nlohmann::json &doc);
nlohmann::json problem_to_json(const MqoProblem &problem);

MqoProblem parse_problem(const std::string &text);
MqoProblem load_problem_file(const std::filesystem::path &path);

} // namespace qstack::mqo
