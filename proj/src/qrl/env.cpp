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

#include "qstack/qrl/env.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qstack/common/error.hpp"

namespace qstack::qrl {

ChainEnv::ChainEnv(std::uint64_t seed) : rng_(seed) {}

void ChainEnv::seed(std::uint64_t seed) { rng_.seed(seed); }

std::vector<double> ChainEnv::encode(int cell) {
    const double position = std::numbers::pi * static_cast<double>(cell) / kGoal;
    return {position, position, 0.0, 0.0};
}

int ChainEnv::next_cell(int cell, int action) {
    return action == kRight ? cell + 1 : std::max(0, cell - 1);
}

double ChainEnv::reward(int cell, int action) {
    return next_cell(cell, action) == kGoal ? 1.0 : 0.0;
}

std::vector<double> ChainEnv::reset() {
    std::uniform_int_distribution<int> start(0, kGoal - 1);
    cell_ = start(rng_);
    steps_ = 0;
    done_ = false;
    return encode(cell_);
}

StepResult ChainEnv::step(int action) {
    require<UsageError>(!done_, "chain: step() after the episode ended; call reset()");
    require<UsageError>(action == kLeft || action == kRight, "chain: action must be 0 or 1");
    StepResult out;
    out.reward = reward(cell_, action);
    cell_ = next_cell(cell_, action);
    ++steps_;
    const bool terminal = cell_ == kGoal;
    out.done = terminal || steps_ >= kMaxSteps;
    out.truncated = out.done && !terminal;
    out.observation = encode(cell_);
    done_ = out.done;
    return out;
}

std::vector<std::array<double, 2>> ChainEnv::optimal_q(double gamma, double tolerance) {
    std::array<double, kCells> value{};
    std::vector<std::array<double, 2>> q(kGoal);
    for (int sweep = 0; sweep < 10000; ++sweep) {
        double change = 0.0;
        for (int c = 0; c < kGoal; ++c) {
            for (int a = 0; a < 2; ++a) {
                const int next = next_cell(c, a);
                const double future = next == kGoal ? 0.0 : value[static_cast<std::size_t>(next)];
                q[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] = reward(c, a) + gamma * future;
            }
            const double v = std::max(q[static_cast<std::size_t>(c)][0], q[static_cast<std::size_t>(c)][1]);
            change = std::max(change, std::abs(v - value[static_cast<std::size_t>(c)]));
            value[static_cast<std::size_t>(c)] = v;
        }
        if (change < tolerance) {
            break;
        }
    }
    return q;
}

namespace {

constexpr double kGravity = 9.8;
constexpr double kCartMass = 1.0;
constexpr double kPoleMass = 0.1;
constexpr double kTotalMass = kCartMass + kPoleMass;
constexpr double kHalfPole = 0.5;
constexpr double kPoleMassLength = kPoleMass * kHalfPole;
constexpr double kForce = 10.0;
constexpr double kTau = 0.02;
constexpr double kThetaLimit = 12.0 * 2.0 * std::numbers::pi / 360.0;
constexpr double kXLimit = 2.4;
// Velocity scales chosen so typical trajectories stay inside [-pi, pi].
constexpr double kXDotScale = 3.0;
constexpr double kThetaDotScale = 3.5;

double squash(double value, double scale) {
    return std::clamp(value / scale * std::numbers::pi, -std::numbers::pi, std::numbers::pi);
}

} // namespace

CartPoleEnv::CartPoleEnv(std::uint64_t seed) : rng_(seed) {}

void CartPoleEnv::seed(std::uint64_t seed) { rng_.seed(seed); }

std::vector<double> CartPoleEnv::observe() const {
    return {squash(state_[0], kXLimit), squash(state_[1], kXDotScale), squash(state_[2], kThetaLimit),
            squash(state_[3], kThetaDotScale)};
}

std::vector<double> CartPoleEnv::reset() {
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    for (auto &v : state_) {
        v = jitter(rng_);
    }
    steps_ = 0;
    done_ = false;
    return observe();
}

StepResult CartPoleEnv::step(int action) {
    require<UsageError>(!done_, "cartpole: step() after the episode ended; call reset()");
    require<UsageError>(action == 0 || action == 1, "cartpole: action must be 0 or 1");
    auto &[x, x_dot, theta, theta_dot] = state_;
    const double force = action == 1 ? kForce : -kForce;
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    const double temp = (force + kPoleMassLength * theta_dot * theta_dot * sin_t) / kTotalMass;
    const double theta_acc = (kGravity * sin_t - cos_t * temp) /
                             (kHalfPole * (4.0 / 3.0 - kPoleMass * cos_t * cos_t / kTotalMass));
    const double x_acc = temp - kPoleMassLength * theta_acc * cos_t / kTotalMass;
    x += kTau * x_dot;
    x_dot += kTau * x_acc;
    theta += kTau * theta_dot;
    theta_dot += kTau * theta_acc;
    ++steps_;

    const bool failed = std::abs(x) > kXLimit || std::abs(theta) > kThetaLimit;
    StepResult out;
    out.reward = 1.0;
    out.done = failed || steps_ >= kMaxSteps;
    out.truncated = out.done && !failed;
    out.observation = observe();
    done_ = out.done;
    return out;
}

} // namespace qstack::qrl
