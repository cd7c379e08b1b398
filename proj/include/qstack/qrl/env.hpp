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

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qstack::qrl {

struct StepResult {
    std::vector<double> observation;
    double reward = 0.0;
    /// Episode over, either terminal or cut off by the step cap.
    bool done = false;
    /// Set when `done` comes only from the step cap.
    bool truncated = false;
};

class Environment {
  public:
    virtual ~Environment() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual int observation_dim() const = 0;
    [[nodiscard]] virtual int action_count() const = 0;

    /// Reseeds the start-state stream. The next reset() uses it.
    virtual void seed(std::uint64_t seed) = 0;
    virtual std::vector<double> reset() = 0;

    /// Throws UsageError when called after `done` without a reset().
    virtual StepResult step(int action) = 0;
};

/**
 * Five-cell corridor. Cells 0..3 are live, cell 4 is the goal. Action 0
 * moves left (cell 0 stays put), action 1 moves right. Entering the goal
 * pays +1 and ends the episode; all other moves pay 0. Episodes are cut at
 * 20 steps. reset() starts in a uniformly drawn live cell.
 *
 * The observation is (p, p, 0, 0) with p = pi * cell / 4, so the position
 * drives the qubits read by the "left" pair and the other pair starts at |00>.
 */
class ChainEnv final : public Environment {
  public:
    static constexpr int kCells = 5;
    static constexpr int kGoal = 4;
    static constexpr int kMaxSteps = 20;
    static constexpr int kLeft = 0;
    static constexpr int kRight = 1;

    explicit ChainEnv(std::uint64_t seed = 0);

    [[nodiscard]] std::string name() const override { return "chain"; }
    [[nodiscard]] int observation_dim() const override { return 4; }
    [[nodiscard]] int action_count() const override { return 2; }

    void seed(std::uint64_t seed) override;
    std::vector<double> reset() override;
    StepResult step(int action) override;

    [[nodiscard]] int cell() const noexcept { return cell_; }

    static std::vector<double> encode(int cell);

    /// Deterministic model: next cell and reward of `action` in `cell`.
    static int next_cell(int cell, int action);
    static double reward(int cell, int action);

    /// Q*(cell, action) by value iteration, for cells 0..3.
    static std::vector<std::array<double, 2>> optimal_q(double gamma, double tolerance = 1e-12);

  private:
    std::mt19937_64 rng_;
    int cell_ = 0;
    int steps_ = 0;
    bool done_ = true;
};

/**
 * Classic cart-pole balance task (Euler integration, 0.02 s step, 10 N
 * push). Observations (x, x_dot, theta, theta_dot) are scaled into
 * [-pi, pi] for angle encoding. Reward 1 per surviving step; failure at
 * |x| > 2.4 or |theta| > 12 degrees; cut at 500 steps.
 */
class CartPoleEnv final : public Environment {
  public:
    static constexpr int kMaxSteps = 500;

    explicit CartPoleEnv(std::uint64_t seed = 0);

    [[nodiscard]] std::string name() const override { return "cartpole"; }
    [[nodiscard]] int observation_dim() const override { return 4; }
    [[nodiscard]] int action_count() const override { return 2; }

    void seed(std::uint64_t seed) override;
    std::vector<double> reset() override;
    StepResult step(int action) override;

    [[nodiscard]] const std::array<double, 4> &physical_state() const noexcept { return state_; }

  private:
    [[nodiscard]] std::vector<double> observe() const;

    std::mt19937_64 rng_;
    std::array<double, 4> state_{};
    int steps_ = 0;
    bool done_ = true;
};

} // namespace qstack::qrl
