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

#include "qstack/qrl/policy.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numbers>
#include <string>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"
#include "qstack/sim/executor.hpp"
#include "qstack/sim/gradient.hpp"

namespace qstack::qrl {

VqcPolicy::VqcPolicy(int n_qubits, int n_layers, std::vector<sim::PauliObservable> readouts)
    : n_qubits_(n_qubits), n_layers_(n_layers), readouts_(std::move(readouts)),
      theta_(static_cast<std::size_t>(2 * n_layers * n_qubits), 0.0) {
    require<ConfigError>(n_qubits >= 1 && n_qubits <= sim::kMaxQubits, "vqc: bad qubit count");
    require<ConfigError>(n_layers >= 0, "vqc: layer count must be >= 0");
    require<ConfigError>(!readouts_.empty(), "vqc: need at least one readout");
    for (const auto &r : readouts_) {
        require<ShapeError>(r.n_qubits() == n_qubits, "vqc: readout size differs from register");
    }
}

std::vector<sim::PauliObservable> VqcPolicy::pair_readouts(int n_qubits, int n_actions) {
    require<ConfigError>(n_actions >= 1 && n_qubits >= 2 * n_actions,
                         "vqc: pair readouts need n_qubits >= 2 * n_actions");
    std::vector<sim::PauliObservable> out;
    for (int a = 0; a < n_actions; ++a) {
        std::string p(static_cast<std::size_t>(n_qubits), 'I');
        p[static_cast<std::size_t>(2 * a)] = 'Z';
        p[static_cast<std::size_t>(2 * a + 1)] = 'Z';
        out.push_back(sim::PauliObservable::term(p));
    }
    return out;
}

void VqcPolicy::set_theta(std::span<const double> theta) {
    require<ShapeError>(theta.size() == theta_.size(), "vqc: theta has the wrong size");
    std::copy(theta.begin(), theta.end(), theta_.begin());
}

sim::ParameterizedCircuit VqcPolicy::circuit(std::span<const double> state) const {
    require<ShapeError>(state.size() == static_cast<std::size_t>(n_qubits_),
                        "vqc: state has " + std::to_string(state.size()) + " entries, expected " +
                            std::to_string(n_qubits_));
    sim::ParameterizedCircuit c(n_qubits_, n_params());
    for (int q = 0; q < n_qubits_; ++q) {
        const double angle =
            std::clamp(state[static_cast<std::size_t>(q)], -std::numbers::pi, std::numbers::pi);
        c.rx(q, angle);
    }
    for (int layer = 0; layer < n_layers_; ++layer) {
        for (int q = 0; q < n_qubits_; ++q) {
            c.ry(q, sim::ParamRef{static_cast<int>(param_index(n_qubits_, layer, q, 0))});
            c.rz(q, sim::ParamRef{static_cast<int>(param_index(n_qubits_, layer, q, 1))});
        }
        if (n_qubits_ > 1) {
            for (int q = 0; q < n_qubits_; ++q) {
                c.cz(q, (q + 1) % n_qubits_);
            }
        }
    }
    return c;
}

std::vector<double> VqcPolicy::q_values(std::span<const double> state) const {
    const auto sv = sim::run(circuit(state), theta_);
    std::vector<double> q;
    q.reserve(readouts_.size());
    for (const auto &r : readouts_) {
        q.push_back(sim::expectation(sv, r));
    }
    return q;
}

int greedy_action(std::span<const double> q) {
    require<ShapeError>(!q.empty(), "greedy_action: no Q-values");
    return static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
}

int select_action(const VqcPolicy &policy, std::span<const double> state, double epsilon,
                  std::mt19937_64 &rng) {
    require<ConfigError>(epsilon >= 0.0 && epsilon <= 1.0, "select_action: epsilon must lie in [0, 1]");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) < epsilon) {
        std::uniform_int_distribution<int> pick(0, policy.action_count() - 1);
        return pick(rng);
    }
    return greedy_action(policy.q_values(state));
}

std::vector<double> compute_targets(std::span<const Transition> batch, const VqcPolicy &target,
                                    double gamma, TargetMode mode) {
    require<UsageError>(!batch.empty(), "compute_targets: empty batch");
    std::vector<double> y(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto &t = batch[i];
        const double reward = mode == TargetMode::Bellman ? t.reward : 0.0;
        if (t.done) {
            y[i] = reward;
            continue;
        }
        const auto q_next = target.q_values(t.next_state);
        y[i] = reward + gamma * *std::max_element(q_next.begin(), q_next.end());
    }
    return y;
}

LossGradient loss_and_gradient(const VqcPolicy &policy, std::span<const Transition> batch,
                               std::span<const double> targets) {
    require<ShapeError>(targets.size() == batch.size(), "loss: targets and batch differ in length");
    require<UsageError>(!batch.empty(), "loss: empty batch");
    const auto n = static_cast<std::int64_t>(batch.size());
    const auto params = policy.theta();
    std::vector<double> residual(batch.size());
    std::vector<std::vector<double>> per_sample(batch.size());
    std::exception_ptr failure;

    parallel::for_tasks(n, [&](std::int64_t s) {
        try {
            const auto &t = batch[static_cast<std::size_t>(s)];
            require<ShapeError>(t.action >= 0 && t.action < policy.action_count(),
                                "loss: transition action out of range");
            const auto circuit = policy.circuit(t.state);
            const auto &readout = policy.readouts()[static_cast<std::size_t>(t.action)];
            const double q = sim::expectation(sim::run(circuit, params), readout);
            residual[static_cast<std::size_t>(s)] = q - targets[static_cast<std::size_t>(s)];
            per_sample[static_cast<std::size_t>(s)] = sim::param_shift_gradient(circuit, params, readout);
        } catch (...) {
#pragma omp critical(qstack_loss_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    });
    if (failure) {
        std::rethrow_exception(failure);
    }

    LossGradient out;
    out.gradient.assign(params.size(), 0.0);
    const double inv = 1.0 / static_cast<double>(batch.size());
    for (std::size_t s = 0; s < batch.size(); ++s) {
        out.loss += residual[s] * residual[s] * inv;
        for (std::size_t k = 0; k < params.size(); ++k) {
            out.gradient[k] += 2.0 * inv * residual[s] * per_sample[s][k];
        }
    }
    return out;
}

std::size_t gradient_evaluation_count(const VqcPolicy &policy, std::size_t batch_size) {
    return batch_size * (2 * static_cast<std::size_t>(policy.n_params()) + 1);
}

} // namespace qstack::qrl
