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

// qstack: experiment runner for the MQO and quantum RL workloads.
//
//   qstack mqo-solve --input data/demo_mqo.json --method qaoa --p 2 --seed 1
//   qstack rl-train --env chain --steps 5000 --seed 3 --out run.json
//   qstack bench-grad --qubits 4 --layers 2 --batch 10

#include <iostream>

#include "CLI11.hpp"
#include "qstack/cli/commands.hpp"
#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"

namespace {

int exit_code_for(const qstack::Error &e) {
    if (dynamic_cast<const qstack::InputError *>(&e) || dynamic_cast<const qstack::UsageError *>(&e)) {
        return 2;
    }
    if (dynamic_cast<const qstack::ConfigError *>(&e) || dynamic_cast<const qstack::SizeError *>(&e) ||
        dynamic_cast<const qstack::InstanceError *>(&e)) {
        return 3;
    }
    return 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hybrid quantum-classical experiment runner"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: QSTACK_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    std::string out;
    qstack::cli::MqoSolveOptions mqo;
    auto *solve = app.add_subcommand("mqo-solve", "Solve a multi-query optimisation instance");
    auto *input = solve->add_option("--input", mqo.input, "Instance JSON file")->check(CLI::ExistingFile);
    solve->add_option("--generate", mqo.generate, "Random instance QxP[:density]")->excludes(input);
    solve->add_option("--method", mqo.method, "qaoa, anneal or exact")->capture_default_str();
    solve->add_option("--p", mqo.p, "QAOA layers")->capture_default_str();
    solve->add_option("--steps", mqo.steps, "QAOA optimiser steps")->capture_default_str();
    solve->add_option("--lr", mqo.learning_rate, "QAOA learning rate")->capture_default_str();
    solve->add_option("--shots", mqo.shots, "QAOA samples")->capture_default_str();
    solve->add_option("--sweeps", mqo.sweeps, "Annealing sweeps")->capture_default_str();
    solve->add_option("--restarts", mqo.restarts, "Annealing restarts")->capture_default_str();
    solve->add_option("--epsilon", mqo.epsilon, "Penalty margin")->capture_default_str();
    solve->add_option("--seed", mqo.seed, "Run seed")->capture_default_str();
    solve->add_option("--out", out, "RunRecord path (default stdout)");
    solve->add_option("--csv", mqo.csv, "Ranked solutions as CSV");

    qstack::cli::RlTrainOptions rl;
    auto *train = app.add_subcommand("rl-train", "Train a VQC Q-learning agent");
    train->add_option("--env", rl.env, "chain or cartpole")->capture_default_str();
    train->add_option("--qubits", rl.qubits, "Register size")->capture_default_str();
    train->add_option("--layers", rl.layers, "Variational layers")->capture_default_str();
    train->add_option("--steps", rl.steps, "Environment steps")->capture_default_str();
    train->add_option("--lr", rl.learning_rate, "Learning rate")->capture_default_str();
    train->add_option("--init-range", rl.init_range, "Initial theta range, 0 for zeros")->capture_default_str();
    train->add_option("--seed", rl.seed, "Run seed")->capture_default_str();
    train->add_option("--out", out, "RunRecord path (default stdout)");
    train->add_option("--csv", rl.csv, "Episode returns as CSV");

    qstack::cli::BenchGradOptions bench;
    auto *grad = app.add_subcommand("bench-grad", "Time batch parameter-shift gradients");
    grad->add_option("--qubits", bench.qubits, "Register size")->capture_default_str();
    grad->add_option("--layers", bench.layers, "Variational layers")->capture_default_str();
    grad->add_option("--batch", bench.batch, "Transitions per batch")->capture_default_str();
    grad->add_option("--repeats", bench.repeats, "Timed repetitions")->capture_default_str();
    grad->add_option("--qubit-cap", bench.qubit_cap, "Largest accepted register")->capture_default_str();
    grad->add_option("--seed", bench.seed, "Run seed")->capture_default_str();
    grad->add_option("--out", out, "RunRecord path (default stdout)");
    grad->add_option("--csv", bench.csv, "Per-repeat timings as CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (threads > 0) {
            qstack::parallel::set_thread_count(threads);
        }
        qstack::cli::RunRecord record;
        if (*solve) {
            record = qstack::cli::cmd_mqo_solve(mqo);
        } else if (*train) {
            record = qstack::cli::cmd_rl_train(rl);
        } else {
            record = qstack::cli::cmd_bench_grad(bench);
        }
        qstack::cli::write_record(record, out);
    } catch (const qstack::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return 0;
}
