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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"
#include "qstack/qrl/agent.hpp"
#include "qstack/sim/executor.hpp"

using namespace qstack;
using namespace qstack::qrl;

namespace {

VqcPolicy chain_policy(int layers = 2) {
    return VqcPolicy(4, layers, VqcPolicy::pair_readouts(4, 2));
}

std::vector<double> random_theta(std::size_t n, std::mt19937_64 &rng, double range = 1.0) {
    std::uniform_real_distribution<double> u(-range, range);
    std::vector<double> t(n);
    for (auto &v : t) {
        v = u(rng);
    }
    return t;
}

std::vector<Transition> random_batch(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<Transition> batch(n);
    for (auto &t : batch) {
        t.state = {angle(rng), angle(rng), angle(rng), angle(rng)};
        t.next_state = {angle(rng), angle(rng), angle(rng), angle(rng)};
        t.action = static_cast<int>(rng() % 2);
        t.reward = angle(rng) / std::numbers::pi;
        t.done = rng() % 4 == 0;
    }
    return batch;
}

} // namespace

TEST_CASE("chain episodes are cut at 20 steps") {
    ChainEnv env(1);
    env.reset();
    for (int k = 1; k <= 20; ++k) {
        const auto r = env.step(ChainEnv::kLeft);
        CHECK(r.reward == 0.0);
        CHECK(r.done == (k == 20));
        CHECK(r.truncated == (k == 20));
    }
    CHECK_THROWS_AS(env.step(ChainEnv::kLeft), UsageError);
    CHECK_THROWS_AS(ChainEnv(0).step(0), UsageError);
    env.reset();
    CHECK_THROWS_AS(env.step(2), UsageError);
}

TEST_CASE("chain dynamics and encoding") {
    CHECK(ChainEnv::next_cell(0, ChainEnv::kLeft) == 0);
    CHECK(ChainEnv::next_cell(2, ChainEnv::kLeft) == 1);
    CHECK(ChainEnv::next_cell(3, ChainEnv::kRight) == 4);
    CHECK(ChainEnv::reward(3, ChainEnv::kRight) == 1.0);
    CHECK(ChainEnv::reward(2, ChainEnv::kRight) == 0.0);
    const auto obs = ChainEnv::encode(2);
    CHECK(obs == std::vector<double>{std::numbers::pi / 2, std::numbers::pi / 2, 0.0, 0.0});

    ChainEnv env(3);
    do {
        env.reset();
    } while (env.cell() != 3);
    const auto r = env.step(ChainEnv::kRight);
    CHECK(r.reward == 1.0);
    CHECK(r.done);
    CHECK_FALSE(r.truncated);
}

TEST_CASE("chain resets are deterministic per seed and cover the live cells") {
    ChainEnv a(42);
    ChainEnv b(7);
    b.seed(42);
    std::array<int, 4> seen{};
    for (int k = 0; k < 200; ++k) {
        CHECK(a.reset() == b.reset());
        CHECK(a.cell() >= 0);
        CHECK(a.cell() < ChainEnv::kGoal);
        ++seen[static_cast<std::size_t>(a.cell())];
    }
    for (int count : seen) {
        CHECK(count > 0);
    }
}

TEST_CASE("chain optimal Q matches an independent value iteration") {
    for (double gamma : {0.0, 0.5, 0.9, 0.99}) {
        const auto q = ChainEnv::optimal_q(gamma);
        const auto want = oracle::chain_q_star(gamma);
        for (int c = 0; c < 4; ++c) {
            for (int a = 0; a < 2; ++a) {
                CHECK(q[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] ==
                      doctest::Approx(want[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]).epsilon(1e-10));
            }
        }
        CHECK(q[3][1] == doctest::Approx(1.0));
        CHECK(q[0][1] == doctest::Approx(gamma * gamma * gamma).scale(1.0));
    }
}

TEST_CASE("cart-pole basics") {
    CartPoleEnv env(5);
    const auto obs = env.reset();
    REQUIRE(obs.size() == 4);
    for (double v : obs) {
        CHECK(std::abs(v) <= std::numbers::pi);
    }
    int steps = 0;
    StepResult r;
    do {
        r = env.step(1);
        ++steps;
    } while (!r.done);
    CHECK(steps < CartPoleEnv::kMaxSteps);
    CHECK_FALSE(r.truncated);
    CHECK_THROWS_AS(env.step(0), UsageError);
}

TEST_CASE("replay buffer evicts the oldest transition") {
    ReplayBuffer buf(3);
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS((void)buf.sample(1, rng), UsageError);
    for (int k = 0; k < 5; ++k) {
        buf.push({{static_cast<double>(k)}, 0, 0.0, {}, false});
    }
    CHECK(buf.size() == 3);
    CHECK(buf[0].state[0] == 2.0);
    CHECK(buf[2].state[0] == 4.0);
    for (const auto &t : buf.sample(50, rng)) {
        CHECK(t.state[0] >= 2.0);
    }
    CHECK_THROWS_AS(ReplayBuffer(0), ConfigError);
}

TEST_CASE("VQC Q-values") {
    auto policy = chain_policy();
    const std::vector<double> zero(4, 0.0);
    CHECK(policy.q_values(zero) == std::vector<double>{1.0, 1.0});
    CHECK(policy.n_params() == 16);
    CHECK(policy.circuit(zero).size() == 4 + 2 * (8 + 4));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        policy.set_theta(random_theta(16, rng, std::numbers::pi));
        for (double q : policy.q_values(random_batch(1, rng)[0].state)) {
            CHECK(std::abs(q) <= 1.0 + 1e-12);
        }
    }
    const std::vector<double> short_state(3, 0.0);
    CHECK_THROWS_AS((void)policy.q_values(short_state), ShapeError);
    CHECK_THROWS_AS(policy.set_theta(zero), ShapeError);
    CHECK_THROWS_AS(VqcPolicy::pair_readouts(3, 2), ConfigError);
}

TEST_CASE("two-qubit VQC agrees with the dense oracle") {
    const std::vector<sim::PauliObservable> readouts{sim::PauliObservable::term("ZI"),
                                                     sim::PauliObservable::term("IZ")};
    VqcPolicy policy(2, 3, readouts);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto theta = random_theta(12, rng, 3.0);
        policy.set_theta(theta);
        // Inputs beyond pi get clipped.
        const std::vector<double> state{std::uniform_real_distribution<double>(-4.0, 4.0)(rng),
                                        std::uniform_real_distribution<double>(-4.0, 4.0)(rng)};
        const auto psi = oracle::run(policy.circuit(state), theta);
        const auto q = policy.q_values(state);
        CHECK(q[0] == doctest::Approx(oracle::expectation(psi, oracle::pauli_string("ZI")).real()).epsilon(1e-10));
        CHECK(q[1] == doctest::Approx(oracle::expectation(psi, oracle::pauli_string("IZ")).real()).epsilon(1e-10));
    }
}

TEST_CASE("action selection") {
    auto policy = chain_policy();
    std::mt19937_64 rng(2);
    const std::vector<double> zero(4, 0.0);
    CHECK(select_action(policy, zero, 0.0, rng) == 0);
    const std::vector<double> q{0.1, 0.7};
    CHECK(greedy_action(q) == 1);
    const std::vector<double> tie{0.3, 0.3};
    CHECK(greedy_action(tie) == 0);

    int right = 0;
    const int draws = 10000;
    for (int k = 0; k < draws; ++k) {
        right += select_action(policy, zero, 1.0, rng);
    }
    const double frac = static_cast<double>(right) / draws;
    CHECK(frac >= 0.47);
    CHECK(frac <= 0.53);
    CHECK_THROWS_AS(select_action(policy, zero, 1.5, rng), ConfigError);
}

TEST_CASE("TD targets") {
    auto target = chain_policy();
    const std::vector<double> zero(4, 0.0);
    std::vector<Transition> batch{
        {zero, 0, 0.5, zero, false},
        {zero, 1, 1.0, zero, true},
        {zero, 1, -0.25, zero, false},
    };
    // Zero weights and a zero input give max Q = 1.
    CHECK(compute_targets(batch, target, 0.9) == std::vector<double>{0.5 + 0.9, 1.0, -0.25 + 0.9});
    CHECK(compute_targets(batch, target, 0.0) == std::vector<double>{0.5, 1.0, -0.25});
    const auto discount = compute_targets(batch, target, 0.9, TargetMode::DiscountOnly);
    CHECK(discount == std::vector<double>{0.9, 0.0, 0.9});
    CHECK_THROWS_AS(compute_targets(std::vector<Transition>{}, target, 0.9), UsageError);

    std::mt19937_64 rng(4);
    target.set_theta(random_theta(16, rng));
    const auto random = random_batch(8, rng);
    const auto before = compute_targets(random, target, 0.9);
    auto online = target;
    online.set_theta(random_theta(16, rng));
    CHECK(compute_targets(random, target, 0.9) == before);
}

TEST_CASE("loss and gradient") {
    std::mt19937_64 rng(9);
    auto policy = chain_policy();
    policy.set_theta(random_theta(16, rng));
    const auto batch = random_batch(6, rng);

    std::vector<double> exact;
    for (const auto &t : batch) {
        exact.push_back(policy.q_values(t.state)[static_cast<std::size_t>(t.action)]);
    }
    const auto zero = loss_and_gradient(policy, batch, exact);
    CHECK(zero.loss == doctest::Approx(0.0).scale(1.0));
    for (double g : zero.gradient) {
        CHECK(std::abs(g) < 1e-12);
    }

    const auto targets = compute_targets(batch, policy, 0.9);
    const auto lg = loss_and_gradient(policy, batch, targets);
    const auto fd = oracle::finite_difference(
        [&](const std::vector<double> &theta) {
            auto copy = policy;
            copy.set_theta(theta);
            double loss = 0.0;
            for (std::size_t i = 0; i < batch.size(); ++i) {
                const double q = copy.q_values(batch[i].state)[static_cast<std::size_t>(batch[i].action)];
                loss += (q - targets[i]) * (q - targets[i]) / static_cast<double>(batch.size());
            }
            return loss;
        },
        std::vector<double>(policy.theta().begin(), policy.theta().end()));
    for (std::size_t k = 0; k < fd.size(); ++k) {
        CHECK(lg.gradient[k] == doctest::Approx(fd[k]).epsilon(1e-5).scale(1.0));
    }

    const std::vector<double> short_targets(2, 0.0);
    CHECK_THROWS_AS(loss_and_gradient(policy, batch, short_targets), ShapeError);
}

TEST_CASE("one-qubit loss has a closed form") {
    VqcPolicy policy(1, 1, {sim::PauliObservable::term("Z")});
    const double s = 0.4;
    const double a = -1.1;
    const double y = 0.3;
    policy.set_theta(std::vector<double>{a, 0.8});
    const std::vector<Transition> batch{{{s}, 0, 0.0, {s}, false}};
    const std::vector<double> targets{y};
    const auto lg = loss_and_gradient(policy, batch, targets);
    const double q = std::cos(s) * std::cos(a);
    CHECK(lg.loss == doctest::Approx((q - y) * (q - y)).epsilon(1e-12));
    CHECK(lg.gradient[0] == doctest::Approx(-2.0 * (q - y) * std::cos(s) * std::sin(a)).epsilon(1e-12));
    CHECK(lg.gradient[1] == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("gradient evaluation count matches executed circuits") {
    auto policy = chain_policy();
    std::mt19937_64 rng(1);
    const auto batch = random_batch(10, rng);
    const std::vector<double> targets(10, 0.0);
    const auto before = sim::executions_performed();
    (void)loss_and_gradient(policy, batch, targets);
    CHECK(sim::executions_performed() - before == gradient_evaluation_count(policy, 10));
    CHECK(gradient_evaluation_count(policy, 10) == 330);
}

TEST_CASE("epsilon schedule") {
    AgentConfig cfg;
    CHECK(cfg.epsilon_at(0) == 1.0);
    CHECK(cfg.epsilon_at(1250) == doctest::Approx(0.525));
    CHECK(cfg.epsilon_at(2500) == doctest::Approx(0.05));
    CHECK(cfg.epsilon_at(4999) == doctest::Approx(0.05));
    cfg.gamma = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.buffer_capacity = 8;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.init_range = -0.1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("training contracts") {
    ChainEnv env;
    AgentConfig cfg;
    cfg.total_steps = 0;
    const auto none = train(env, cfg, 3);
    CHECK(none.losses.empty());
    CHECK(none.episode_returns.empty());
    CHECK(std::vector<double>(none.policy.theta().begin(), none.policy.theta().end()) == none.target_theta);
    for (double t : none.target_theta) {
        CHECK(std::abs(t) <= 0.1);
    }

    cfg.init_range = 0.0;
    for (double t : train(env, cfg, 3).target_theta) {
        CHECK(t == 0.0);
    }

    VqcPolicy wide(5, 1, VqcPolicy::pair_readouts(5, 2));
    CHECK_THROWS_AS(train(env, wide, cfg, 1), ConfigError);
}

TEST_CASE("target network follows the sync schedule") {
    ChainEnv env;
    AgentConfig cfg;
    cfg.total_steps = 80;
    cfg.batch_size = 4;
    cfg.target_update_period = 10;
    std::vector<double> frozen;
    int events = 0;
    bool ok = true;
    const auto result = train(env, cfg, 17, [&](const StepEvent &e) {
        ++events;
        std::vector<double> theta(e.theta.begin(), e.theta.end());
        std::vector<double> target(e.target_theta.begin(), e.target_theta.end());
        if (e.step == 1) {
            frozen = target;
        }
        ok = ok && e.synced == (e.step % 10 == 0);
        if (e.synced) {
            ok = ok && target == theta;
            frozen = target;
        } else {
            ok = ok && target == frozen;
        }
    });
    CHECK(ok);
    CHECK(events == 80);
    CHECK(result.sync_steps == std::vector<int>{10, 20, 30, 40, 50, 60, 70, 80});
    CHECK(result.losses.size() == 77);
    CHECK(result.losses.front().first == 4);
}

TEST_CASE("training is deterministic per seed") {
    ChainEnv env;
    AgentConfig cfg;
    cfg.total_steps = 60;
    cfg.batch_size = 4;
    const auto a = train(env, cfg, 5);
    parallel::set_thread_count(3);
    const auto b = train(env, cfg, 5);
    parallel::set_thread_count(0);
    CHECK(a.episode_returns == b.episode_returns);
    CHECK(a.losses == b.losses);
    CHECK(std::vector<double>(a.policy.theta().begin(), a.policy.theta().end()) ==
          std::vector<double>(b.policy.theta().begin(), b.policy.theta().end()));
}
