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

#include <random>
#include <span>
#include <vector>

#include "qstack/qrl/replay_buffer.hpp"
#include "qstack/sim/circuit.hpp"
#include "qstack/sim/observable.hpp"

namespace qstack::qrl {

/**
 * Q-function given by a variational circuit:
 *
 *   RX(s_i) on qubit i                      (input, clipped to [-pi, pi])
 *   per layer: RY(theta) RZ(theta) on every qubit, then CZ(i, (i+1) mod n)
 *
 * and Q(s, a) = <readout_a>. theta has shape (layers, qubits, 2) stored
 * flat as [(layer * n + qubit) * 2 + {0: RY, 1: RZ}], all zero initially.
 */
class VqcPolicy {
  public:
    VqcPolicy(int n_qubits, int n_layers, std::vector<sim::PauliObservable> readouts);

    /// One Z_{2a} Z_{2a+1} readout per action, e.g. ZZII and IIZZ for 4
    /// qubits and 2 actions. Needs n_qubits >= 2 * n_actions.
    static std::vector<sim::PauliObservable> pair_readouts(int n_qubits, int n_actions);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] int n_layers() const noexcept { return n_layers_; }
    [[nodiscard]] int n_params() const noexcept { return 2 * n_layers_ * n_qubits_; }
    [[nodiscard]] int action_count() const noexcept { return static_cast<int>(readouts_.size()); }
    [[nodiscard]] const std::vector<sim::PauliObservable> &readouts() const noexcept { return readouts_; }

    [[nodiscard]] std::span<const double> theta() const noexcept { return theta_; }
    void set_theta(std::span<const double> theta);

    static constexpr std::size_t param_index(int n_qubits, int layer, int qubit, int which) {
        return static_cast<std::size_t>((layer * n_qubits + qubit) * 2 + which);
    }

    /// Circuit for one observation, weights as symbolic slots.
    [[nodiscard]] sim::ParameterizedCircuit circuit(std::span<const double> state) const;

    /// Q(s, a) for every action. Throws ShapeError on a wrong state length.
    [[nodiscard]] std::vector<double> q_values(std::span<const double> state) const;

  private:
    int n_qubits_;
    int n_layers_;
    std::vector<sim::PauliObservable> readouts_;
    std::vector<double> theta_;
};

/// First index of the maximum.
int greedy_action(std::span<const double> q);

/// epsilon-greedy: uniform random action with probability epsilon, else the
/// greedy one. One uniform draw is consumed per call, plus one action draw
/// when exploring.
int select_action(const VqcPolicy &policy, std::span<const double> state, double epsilon,
                  std::mt19937_64 &rng);

enum class TargetMode {
    /// y = r + gamma max_a' Q(s', a'; theta-) (r alone on terminal steps)
    Bellman,
    /// y = gamma max_a' Q(s', a'; theta-), the reward-free variant
    DiscountOnly,
};

std::vector<double> compute_targets(std::span<const Transition> batch, const VqcPolicy &target,
                                    double gamma, TargetMode mode = TargetMode::Bellman);

struct LossGradient {
    double loss = 0.0;
    std::vector<double> gradient;
};

/// Mean squared TD error and its parameter-shift gradient with respect to
/// theta. Targets are constants. Per-sample work runs in parallel and is
/// summed in batch order.
LossGradient loss_and_gradient(const VqcPolicy &policy, std::span<const Transition> batch,
                               std::span<const double> targets);

/// Circuit executions one loss_and_gradient call performs: one forward pass
/// plus 2 * n_params shifted passes per sample.
std::size_t gradient_evaluation_count(const VqcPolicy &policy, std::size_t batch_size);

} // namespace qstack::qrl
