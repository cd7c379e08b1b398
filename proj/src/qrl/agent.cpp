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

#include "qstack/qrl/agent.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qstack/common/error.hpp"

namespace qstack::qrl {

namespace {

constexpr std::uint64_t kEnvStream = 0xD1B54A32D192ED03ULL;
constexpr std::uint64_t kInitStream = 0x8CB92BA72F3D8DD7ULL;

} // namespace

void AgentConfig::validate() const {
    require<ConfigError>(gamma >= 0.0 && gamma < 1.0, "agent: gamma must lie in [0, 1)");
    require<ConfigError>(epsilon_start >= 0.0 && epsilon_start <= 1.0 && epsilon_end >= 0.0 &&
                             epsilon_end <= 1.0,
                         "agent: epsilon schedule must stay in [0, 1]");
    require<ConfigError>(epsilon_decay_steps >= 0, "agent: epsilon_decay_steps must be >= 0");
    require<ConfigError>(batch_size >= 1, "agent: batch_size must be >= 1");
    require<ConfigError>(buffer_capacity >= batch_size, "agent: buffer must hold at least one batch");
    require<ConfigError>(target_update_period >= 1, "agent: target_update_period must be >= 1");
    require<ConfigError>(learning_rate > 0.0 && std::isfinite(learning_rate),
                         "agent: learning_rate must be positive");
    require<ConfigError>(total_steps >= 0, "agent: total_steps must be >= 0");
    require<ConfigError>(n_layers >= 0, "agent: n_layers must be >= 0");
    require<ConfigError>(init_range >= 0.0 && std::isfinite(init_range),
                         "agent: init_range must be >= 0");
}

double AgentConfig::epsilon_at(int step) const {
    const int decay = epsilon_decay_steps > 0 ? epsilon_decay_steps : std::max(1, total_steps / 2);
    const double frac = std::min(1.0, static_cast<double>(step) / static_cast<double>(decay));
    return epsilon_start + frac * (epsilon_end - epsilon_start);
}

VqcPolicy make_policy(const Environment &env, int n_layers) {
    const int n = env.observation_dim();
    return VqcPolicy(n, n_layers, VqcPolicy::pair_readouts(n, env.action_count()));
}

TrainResult train(Environment &env, VqcPolicy policy, const AgentConfig &config,
                  std::uint64_t seed, const StepObserver &observer) {
    config.validate();
    require<ConfigError>(env.observation_dim() == policy.n_qubits(),
                         "agent: environment observation dimension " +
                             std::to_string(env.observation_dim()) + " differs from " +
                             std::to_string(policy.n_qubits()) + " qubits");
    require<ConfigError>(env.action_count() == policy.action_count(),
                         "agent: environment and policy disagree on the action count");

    std::mt19937_64 rng(seed);
    env.seed(seed ^ kEnvStream);
    ReplayBuffer buffer(static_cast<std::size_t>(config.buffer_capacity));

    TrainResult result{policy, std::vector<double>(policy.theta().begin(), policy.theta().end()), {}, {}, {}, 0.0};
    VqcPolicy target = policy;
    std::vector<double> theta(policy.theta().begin(), policy.theta().end());

    std::vector<double> obs = env.reset();
    double episode_return = 0.0;
    for (int step = 1; step <= config.total_steps; ++step) {
        const double epsilon = config.epsilon_at(step - 1);
        const int action = select_action(policy, obs, epsilon, rng);
        StepResult outcome = env.step(action);
        episode_return += outcome.reward;
        buffer.push({obs, action, outcome.reward, outcome.observation, outcome.done && !outcome.truncated});
        if (outcome.done) {
            result.episode_returns.push_back(episode_return);
            episode_return = 0.0;
            obs = env.reset();
        } else {
            obs = std::move(outcome.observation);
        }

        if (buffer.size() >= static_cast<std::size_t>(config.batch_size)) {
            const auto batch = buffer.sample(static_cast<std::size_t>(config.batch_size), rng);
            const auto targets = compute_targets(batch, target, config.gamma, config.target_mode);
            const auto lg = loss_and_gradient(policy, batch, targets);
            for (std::size_t k = 0; k < theta.size(); ++k) {
                theta[k] -= config.learning_rate * lg.gradient[k];
            }
            policy.set_theta(theta);
            result.losses.emplace_back(step, lg.loss);
        }

        const bool synced = step % config.target_update_period == 0;
        if (synced) {
            target.set_theta(theta);
            result.sync_steps.push_back(step);
        }
        result.final_epsilon = epsilon;
        if (observer) {
            observer(StepEvent{step, epsilon, synced, policy.theta(), target.theta()});
        }
    }

    result.policy = std::move(policy);
    result.target_theta.assign(target.theta().begin(), target.theta().end());
    return result;
}

TrainResult train(Environment &env, const AgentConfig &config, std::uint64_t seed,
                  const StepObserver &observer) {
    config.validate();
    auto policy = make_policy(env, config.n_layers);
    if (config.init_range > 0.0) {
        std::mt19937_64 rng(seed ^ kInitStream);
        std::uniform_real_distribution<double> init(-config.init_range, config.init_range);
        std::vector<double> theta(static_cast<std::size_t>(policy.n_params()));
        for (auto &t : theta) {
            t = init(rng);
        }
        policy.set_theta(theta);
    }
    return train(env, std::move(policy), config, seed, observer);
}

} // namespace qstack::qrl
