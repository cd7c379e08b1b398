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

#include "qstack/cli/run_record.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include "qstack/common/error.hpp"

namespace qstack::cli {

void PhaseTimer::lap(const std::string &name) {
    const auto now = Clock::now();
    phases_.emplace_back(name, std::chrono::duration<double>(now - mark_).count());
    mark_ = now;
}

nlohmann::json PhaseTimer::to_json() const {
    nlohmann::json phases = nlohmann::json::object();
    for (const auto &[name, seconds] : phases_) {
        phases[name] = seconds;
    }
    return {{"phases_s", phases},
            {"total_s", std::chrono::duration<double>(mark_ - start_).count()}};
}

nlohmann::json RunRecord::to_json() const {
    return {{"schema_version", kSchemaVersion},
            {"artifact_version", kArtifactVersion},
            {"command", command},
            {"config", config},
            {"seed", seed},
            {"results", results},
            {"timings", timings}};
}

std::string RunRecord::results_text() const { return results.dump(); }

void write_record(const RunRecord &record, const std::filesystem::path &path) {
    const std::string text = record.to_json().dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    require<InputError>(static_cast<bool>(out), "cannot open '" + path.string() + "' for writing");
    out << text;
}

void write_csv(const std::filesystem::path &path, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows) {
    std::ofstream out(path, std::ios::binary);
    require<InputError>(static_cast<bool>(out), "cannot open '" + path.string() + "' for writing");
    auto line = [&out](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "," : "") << cells[i];
        }
        out << '\n';
    };
    line(header);
    for (const auto &row : rows) {
        line(row);
    }
}

std::string format_number(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

} // namespace qstack::cli
