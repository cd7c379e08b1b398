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

#include <cstdint>
#include <string>

#include "qstack/cli/run_record.hpp"
#include "qstack/mqo/problem.hpp"

namespace qstack::cli {

/// Largest instance for which mqo-solve also runs the exact solver to
/// report an optimality gap.
inline constexpr int kGapReferenceMaxPlans = 20;

struct MqoSolveOptions {
    /// Instance file; exclusive with `generate`.
    std::string input;
    /// Random instance spec "QxP" or "QxP:density", seeded by `seed`.
    std::string generate;
    std::string method = "qaoa";
    int p = 1;
    int steps = 200;
    double learning_rate = 0.05;
    std::uint64_t shots = 4096;
    int sweeps = 1000;
    int restarts = 4;
    double epsilon = mqo::kDefaultEpsilon;
    std::uint64_t seed = 0;
    /// Optional CSV of the ranked solutions.
    std::string csv;
};

struct RlTrainOptions {
    std::string env = "chain";
    int qubits = 4;
    int layers = 2;
    int steps = 5000;
    double learning_rate = 0.1;
    double init_range = 0.1;
    std::uint64_t seed = 0;
    /// Optional CSV of per-episode returns.
    std::string csv;
};

struct BenchGradOptions {
    int qubits = 4;
    int layers = 2;
    int batch = 10;
    int repeats = 5;
    int qubit_cap = 12;
    std::uint64_t seed = 0;
    /// Optional CSV of per-repeat batch timings.
    std::string csv;
};

/// Parses "QxP" or "QxP:density". Throws InputError on malformed text.
mqo::MqoProblem generate_from_spec(const std::string &spec, std::uint64_t seed);

/// Solves one MQO instance with QAOA, annealing or enumeration and ranks the
/// resulting bitstrings. Errors: InputError for a bad instance source or
/// method name, plus whatever the solvers raise.
RunRecord cmd_mqo_solve(const MqoSolveOptions &options);

/// Trains a VQC Q-learner and reports its history and greedy policy. For the
/// chain environment the policy is compared against value iteration.
/// Errors: InputError for an unknown environment, ConfigError when the qubit
/// count does not match the observation size.
RunRecord cmd_rl_train(const RlTrainOptions &options);

/// Times batch loss gradients of a random VQC workload and counts the
/// circuit executions they need. Errors: ConfigError above the qubit cap.
RunRecord cmd_bench_grad(const BenchGradOptions &options);

} // namespace qstack::cli
