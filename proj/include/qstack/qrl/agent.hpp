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
#include <functional>
#include <span>
#include <vector>

#include "qstack/qrl/env.hpp"
#include "qstack/qrl/policy.hpp"

namespace qstack::qrl {

struct AgentConfig {
    double gamma = 0.9;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    /// Linear decay length in steps; 0 means half of total_steps.
    int epsilon_decay_steps = 0;
    int batch_size = 16;
    int buffer_capacity = 2000;
    int target_update_period = 25;
    double learning_rate = 0.1;
    int total_steps = 5000;
    int n_layers = 2;
    /// theta starts uniform in [-init_range, init_range]; 0 gives all zeros.
    double init_range = 0.1;
    TargetMode target_mode = TargetMode::Bellman;

    /// Throws ConfigError on out-of-range values.
    void validate() const;

    /// Exploration rate used when choosing the action of step `step` (0-based).
    [[nodiscard]] double epsilon_at(int step) const;
};

/// Snapshot handed to the optional per-step observer after the update and
/// any target sync of step `step` (1-based).
struct StepEvent {
    int step = 0;
    double epsilon = 0.0;
    bool synced = false;
    std::span<const double> theta;
    std::span<const double> target_theta;
};

using StepObserver = std::function<void(const StepEvent &)>;

struct TrainResult {
    VqcPolicy policy;
    std::vector<double> target_theta;
    /// Return of every finished episode, in order.
    std::vector<double> episode_returns;
    /// (step, loss) of every gradient update.
    std::vector<std::pair<int, double>> losses;
    std::vector<int> sync_steps;
    double final_epsilon = 0.0;
};

/**
 * Deep Q-learning with a VQC Q-function and a periodically synced target
 * copy. Per step: act epsilon-greedily, store the transition, and once the
 * buffer holds a batch, sample it, form targets with theta-, and take one
 * gradient step on the mean squared TD error. theta- <- theta whenever
 * step % target_update_period == 0.
 *
 * Deterministic for a given seed: the environment is reseeded from it and
 * all agent randomness comes from one mt19937_64 stream.
 */
TrainResult train(Environment &env, VqcPolicy policy, const AgentConfig &config,
                  std::uint64_t seed, const StepObserver &observer = {});

/// Builds a policy with pair readouts sized to `env` and initialises theta
/// from `config.init_range` on a stream derived from `seed`.
/// Throws ConfigError if the environment cannot be encoded that way.
TrainResult train(Environment &env, const AgentConfig &config, std::uint64_t seed,
                  const StepObserver &observer = {});

VqcPolicy make_policy(const Environment &env, int n_layers);

} // namespace qstack::qrl
