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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qstack::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char *kArtifactVersion = "0.1.0";

/// Wall-clock seconds per named phase, in the order the phases ran.
class PhaseTimer {
  public:
    using Clock = std::chrono::steady_clock;

    PhaseTimer() : start_(Clock::now()), mark_(start_) {}

    /// Closes the current phase under `name` and starts the next one.
    void lap(const std::string &name);

    [[nodiscard]] nlohmann::json to_json() const;

  private:
    Clock::time_point start_;
    Clock::time_point mark_;
    std::vector<std::pair<std::string, double>> phases_;
};

/**
 * Output of one CLI command. `results` is the reproducible payload: two runs
 * with the same config and seed serialise it to identical bytes. `timings`
 * holds everything that depends on the clock.
 */
struct RunRecord {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::uint64_t seed = 0;
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    [[nodiscard]] nlohmann::json to_json() const;

    /// Canonical serialisation of `results` alone.
    [[nodiscard]] std::string results_text() const;
};

/// Writes the record as indented JSON. An empty path writes to stdout.
void write_record(const RunRecord &record, const std::filesystem::path &path);

/// Writes rows as comma-separated text with a header line.
void write_csv(const std::filesystem::path &path, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

} // namespace qstack::cli
