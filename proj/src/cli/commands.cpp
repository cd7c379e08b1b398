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

#include "qstack/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <numeric>
#include <random>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"
#include "qstack/mqo/io.hpp"
#include "qstack/qaoa/qaoa.hpp"
#include "qstack/qrl/agent.hpp"
#include "qstack/qubo/solvers.hpp"
#include "qstack/sim/executor.hpp"

namespace qstack::cli {

namespace {

using nlohmann::json;

std::string bits_of(std::span<const int> x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) {
        s[i] = x[i] ? '1' : '0';
    }
    return s;
}

std::vector<int> assignment_of(const std::string &bits) {
    std::vector<int> x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        x[i] = bits[i] == '1' ? 1 : 0;
    }
    return x;
}

template <class T> bool parse_full(std::string_view text, T &value) {
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

struct Candidate {
    std::vector<int> assignment;
    std::optional<std::uint64_t> count;
    std::optional<double> frequency;
};

json solution_json(const Candidate &c, const mqo::MqoProblem &problem, const qubo::QuboModel &model) {
    const auto decoded = mqo::decode(c.assignment, problem);
    json selection = json::array();
    for (const auto &s : decoded.selection) {
        selection.push_back(s ? json(*s) : json(nullptr));
    }
    json violations = json::array();
    for (const auto &v : decoded.violations) {
        violations.push_back({{"query", v.query}, {"selected", v.selected}});
    }
    json out = {{"bitstring", bits_of(c.assignment)},
                {"qubo_energy", qubo::evaluate(model, c.assignment)},
                {"feasible", decoded.feasible},
                {"selection", selection},
                {"violations", violations},
                {"cost", decoded.feasible ? json(mqo::selection_cost(c.assignment, problem)) : json(nullptr)}};
    if (c.count) {
        out["count"] = *c.count;
        out["frequency"] = *c.frequency;
    }
    return out;
}

std::unique_ptr<qrl::Environment> make_env(const std::string &name) {
    if (name == "chain") {
        return std::make_unique<qrl::ChainEnv>();
    }
    if (name == "cartpole") {
        return std::make_unique<qrl::CartPoleEnv>();
    }
    throw InputError("rl-train: unknown environment '" + name + "' (expected chain or cartpole)");
}

json chain_policy_table(const qrl::VqcPolicy &policy, double gamma) {
    const auto optimal = qrl::ChainEnv::optimal_q(gamma);
    json rows = json::array();
    bool all_match = true;
    for (int cell = 0; cell < qrl::ChainEnv::kGoal; ++cell) {
        const auto q = policy.q_values(qrl::ChainEnv::encode(cell));
        const auto &qs = optimal[static_cast<std::size_t>(cell)];
        const int greedy = qrl::greedy_action(q);
        const int best = qrl::greedy_action(qs);
        all_match = all_match && greedy == best;
        rows.push_back({{"cell", cell},
                        {"q", q},
                        {"greedy_action", greedy},
                        {"optimal_q", qs},
                        {"optimal_action", best}});
    }
    return {{"states", rows}, {"matches_optimal", all_match}};
}

json greedy_rollout(qrl::Environment &env, const qrl::VqcPolicy &policy, std::uint64_t seed) {
    env.seed(seed);
    auto obs = env.reset();
    double total = 0.0;
    int steps = 0;
    for (;;) {
        const auto outcome = env.step(qrl::greedy_action(policy.q_values(obs)));
        total += outcome.reward;
        ++steps;
        if (outcome.done) {
            break;
        }
        obs = outcome.observation;
    }
    return {{"greedy_episode_return", total}, {"greedy_episode_steps", steps}};
}

std::vector<sim::PauliObservable> bench_readouts(int n) {
    if (n >= 4) {
        return qrl::VqcPolicy::pair_readouts(n, 2);
    }
    std::vector<sim::PauliObservable> out;
    for (int q = 0; q < std::min(n, 2); ++q) {
        std::string p(static_cast<std::size_t>(n), 'I');
        p[static_cast<std::size_t>(q)] = 'Z';
        out.push_back(sim::PauliObservable::term(p));
    }
    return out;
}

} // namespace

mqo::MqoProblem generate_from_spec(const std::string &spec, std::uint64_t seed) {
    const auto bad = [&spec](const std::string &why) {
        return InputError("generator spec '" + spec + "': " + why + " (expected QxP or QxP:density)");
    };
    const auto x = spec.find('x');
    if (x == std::string::npos) {
        throw bad("missing 'x'");
    }
    const auto colon = spec.find(':', x);
    const std::string_view view(spec);
    const auto q_text = view.substr(0, x);
    const auto p_text = view.substr(x + 1, colon == std::string::npos ? std::string::npos : colon - x - 1);
    int queries = 0;
    int plans = 0;
    double density = 0.0;
    if (!parse_full(q_text, queries) || queries < 1) {
        throw bad("query count must be a positive integer");
    }
    if (!parse_full(p_text, plans) || plans < 1) {
        throw bad("plans per query must be a positive integer");
    }
    if (colon != std::string::npos &&
        (!parse_full(view.substr(colon + 1), density) || density < 0.0 || density > 1.0)) {
        throw bad("density must be a number in [0, 1]");
    }
    return mqo::generate_random_instance(queries, plans, density, seed);
}

RunRecord cmd_mqo_solve(const MqoSolveOptions &o) {
    require<InputError>(o.input.empty() != o.generate.empty(),
                        "mqo-solve: give exactly one of --input or --generate");
    PhaseTimer timer;
    RunRecord record;
    record.command = "mqo-solve";
    record.seed = o.seed;
    record.config = {{"input", o.input},   {"generate", o.generate}, {"method", o.method},
                     {"p", o.p},           {"steps", o.steps},       {"learning_rate", o.learning_rate},
                     {"shots", o.shots},   {"sweeps", o.sweeps},     {"restarts", o.restarts},
                     {"epsilon", o.epsilon}, {"threads", parallel::thread_count()}};

    const auto problem = o.input.empty() ? generate_from_spec(o.generate, o.seed)
                                         : mqo::load_problem_file(o.input);
    problem.validate();
    const auto weights = mqo::default_weights(problem, o.epsilon);
    const auto model = mqo::build_qubo(problem, weights);
    timer.lap("load");

    json results = {{"instance", mqo::problem_to_json(problem)},
                    {"method", o.method},
                    {"weights", {{"epsilon", weights.epsilon}, {"wl", weights.wl}, {"wm", weights.wm}}}};
    std::vector<Candidate> candidates;
    if (o.method == "qaoa") {
        qaoa::SolveConfig cfg;
        cfg.p = o.p;
        cfg.shots = o.shots;
        cfg.epsilon = o.epsilon;
        cfg.optimizer.steps = o.steps;
        cfg.optimizer.learning_rate = o.learning_rate;
        const auto solved = qaoa::solve_mqo_qaoa(problem, cfg, o.seed);
        for (const auto &r : solved.ranked) {
            candidates.push_back({assignment_of(r.bitstring), r.count, r.frequency});
        }
        json trace = json::array();
        for (const auto &t : solved.optimization.trace) {
            trace.push_back({t.step, t.energy, t.gradient_norm});
        }
        results["optimization"] = {{"initial_energy", solved.optimization.trace.front().energy},
                                   {"final_energy", solved.final_energy},
                                   {"gamma", solved.optimization.params.gamma},
                                   {"beta", solved.optimization.params.beta},
                                   {"trace", trace}};
    } else if (o.method == "anneal") {
        qubo::AnnealConfig cfg;
        cfg.sweeps = o.sweeps;
        cfg.restarts = o.restarts;
        candidates.push_back({qubo::simulated_annealing(model, cfg, o.seed).assignment, {}, {}});
    } else if (o.method == "exact") {
        candidates.push_back({qubo::brute_force_minimize(model).assignment, {}, {}});
    } else {
        throw InputError("mqo-solve: unknown method '" + o.method + "' (expected qaoa, anneal or exact)");
    }
    timer.lap("solve");

    json ranked = json::array();
    std::vector<std::vector<std::string>> rows;
    json solution = nullptr;
    for (const auto &c : candidates) {
        auto entry = solution_json(c, problem, model);
        if (solution.is_null() && entry["feasible"].get<bool>()) {
            solution = entry;
        }
        rows.push_back({entry["bitstring"].get<std::string>(),
                        c.count ? std::to_string(*c.count) : "",
                        c.frequency ? format_number(*c.frequency) : "",
                        format_number(entry["qubo_energy"].get<double>()),
                        entry["feasible"].get<bool>() ? "1" : "0"});
        ranked.push_back(std::move(entry));
    }
    results["ranked"] = ranked;
    results["solution"] = solution;

    if (problem.plan_count() <= kGapReferenceMaxPlans) {
        const auto exact = qubo::brute_force_minimize(model);
        results["exact"] = {{"bitstring", bits_of(exact.assignment)}, {"qubo_energy", exact.energy}};
        results["optimality_gap"] =
            solution.is_null() ? json(nullptr) : json(solution["qubo_energy"].get<double>() - exact.energy);
        timer.lap("reference");
    }
    record.results = std::move(results);
    record.timings = timer.to_json();
    if (!o.csv.empty()) {
        write_csv(o.csv, {"bitstring", "count", "frequency", "qubo_energy", "feasible"}, rows);
    }
    return record;
}

RunRecord cmd_rl_train(const RlTrainOptions &o) {
    PhaseTimer timer;
    RunRecord record;
    record.command = "rl-train";
    record.seed = o.seed;
    record.config = {{"env", o.env},     {"qubits", o.qubits},
                     {"layers", o.layers}, {"steps", o.steps},
                     {"learning_rate", o.learning_rate}, {"init_range", o.init_range},
                     {"threads", parallel::thread_count()}};

    auto env = make_env(o.env);
    require<ConfigError>(o.qubits == env->observation_dim(),
                         "rl-train: environment '" + o.env + "' needs " +
                             std::to_string(env->observation_dim()) + " qubits, got " +
                             std::to_string(o.qubits));
    qrl::AgentConfig cfg;
    cfg.n_layers = o.layers;
    cfg.total_steps = o.steps;
    cfg.learning_rate = o.learning_rate;
    cfg.init_range = o.init_range;
    record.config["agent"] = {{"gamma", cfg.gamma},
                              {"batch_size", cfg.batch_size},
                              {"buffer_capacity", cfg.buffer_capacity},
                              {"target_update_period", cfg.target_update_period},
                              {"epsilon_start", cfg.epsilon_start},
                              {"epsilon_end", cfg.epsilon_end}};

    const auto trained = qrl::train(*env, cfg, o.seed);
    timer.lap("train");

    json losses = json::array();
    for (const auto &[step, loss] : trained.losses) {
        losses.push_back({step, loss});
    }
    json results = {{"env", o.env},
                    {"n_params", trained.policy.n_params()},
                    {"episodes", trained.episode_returns.size()},
                    {"episode_returns", trained.episode_returns},
                    {"losses", losses},
                    {"sync_steps", trained.sync_steps.size()},
                    {"final_epsilon", trained.final_epsilon},
                    {"theta", std::vector<double>(trained.policy.theta().begin(), trained.policy.theta().end())}};
    if (o.env == "chain") {
        results["greedy_policy"] = chain_policy_table(trained.policy, cfg.gamma);
    } else {
        results["greedy_policy"] = greedy_rollout(*env, trained.policy, o.seed);
    }
    timer.lap("evaluate");
    record.results = std::move(results);
    record.timings = timer.to_json();

    if (!o.csv.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < trained.episode_returns.size(); ++i) {
            rows.push_back({std::to_string(i), format_number(trained.episode_returns[i])});
        }
        write_csv(o.csv, {"episode", "return"}, rows);
    }
    return record;
}

RunRecord cmd_bench_grad(const BenchGradOptions &o) {
    require<ConfigError>(o.qubits >= 1 && o.qubits <= o.qubit_cap,
                         "bench-grad: qubits must lie in [1, " + std::to_string(o.qubit_cap) + "]");
    require<ConfigError>(o.layers >= 0, "bench-grad: layers must be >= 0");
    require<ConfigError>(o.batch >= 1, "bench-grad: batch must be >= 1");
    require<ConfigError>(o.repeats >= 1, "bench-grad: repeats must be >= 1");
    PhaseTimer timer;
    RunRecord record;
    record.command = "bench-grad";
    record.seed = o.seed;
    record.config = {{"qubits", o.qubits}, {"layers", o.layers},   {"batch", o.batch},
                     {"repeats", o.repeats}, {"qubit_cap", o.qubit_cap},
                     {"threads", parallel::thread_count()}};

    qrl::VqcPolicy policy(o.qubits, o.layers, bench_readouts(o.qubits));
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> target(-1.0, 1.0);
    std::uniform_int_distribution<int> action(0, policy.action_count() - 1);
    std::vector<double> theta(static_cast<std::size_t>(policy.n_params()));
    for (auto &t : theta) {
        t = angle(rng);
    }
    policy.set_theta(theta);
    std::vector<qrl::Transition> batch;
    std::vector<double> targets;
    for (int b = 0; b < o.batch; ++b) {
        std::vector<double> state(static_cast<std::size_t>(o.qubits));
        for (auto &s : state) {
            s = angle(rng);
        }
        const int a = action(rng);
        batch.push_back({state, a, 0.0, state, true});
        targets.push_back(target(rng));
    }
    timer.lap("setup");

    std::vector<double> seconds;
    std::vector<std::uint64_t> counts;
    qrl::LossGradient last;
    for (int r = 0; r < o.repeats; ++r) {
        const auto before = sim::executions_performed();
        const auto t0 = PhaseTimer::Clock::now();
        last = qrl::loss_and_gradient(policy, batch, targets);
        seconds.push_back(std::chrono::duration<double>(PhaseTimer::Clock::now() - t0).count());
        counts.push_back(sim::executions_performed() - before);
    }
    timer.lap("measure");

    const bool stable = std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts.front(); });
    require<InternalConsistencyError>(stable, "bench-grad: evaluation count changed between repeats");
    const auto expected = qrl::gradient_evaluation_count(policy, batch.size());
    record.results = {{"qubits", o.qubits},
                      {"layers", o.layers},
                      {"batch", o.batch},
                      {"n_params", policy.n_params()},
                      {"repeats", o.repeats},
                      {"evaluations_per_batch", counts.front()},
                      {"expected_evaluations", expected},
                      {"counts_match", counts.front() == expected},
                      {"loss", last.loss},
                      {"gradient_norm", std::sqrt(std::inner_product(last.gradient.begin(), last.gradient.end(),
                                                                     last.gradient.begin(), 0.0))}};

    double mean = 0.0;
    for (double s : seconds) {
        mean += s / static_cast<double>(seconds.size());
    }
    double var = 0.0;
    for (double s : seconds) {
        var += (s - mean) * (s - mean);
    }
    const double stddev = seconds.size() > 1 ? std::sqrt(var / static_cast<double>(seconds.size() - 1)) : 0.0;
    record.timings = timer.to_json();
    record.timings["batch_s"] = seconds;
    record.timings["batch_mean_s"] = mean;
    record.timings["batch_stddev_s"] = stddev;

    if (!o.csv.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < seconds.size(); ++i) {
            rows.push_back({std::to_string(i), format_number(seconds[i]), std::to_string(counts[i])});
        }
        write_csv(o.csv, {"repeat", "seconds", "evaluations"}, rows);
    }
    return record;
}

} // namespace qstack::cli
