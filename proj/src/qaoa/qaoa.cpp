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

#include "qstack/qaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qstack/common/error.hpp"
#include "qstack/qubo/convert.hpp"
#include "qstack/sim/executor.hpp"
#include "qstack/sim/gradient.hpp"
#include "qstack/sim/kernels.hpp"

namespace qstack::qaoa {

namespace {

constexpr double kMonotoneSlack = 1e-12;
constexpr std::uint64_t kSampleStream = 0x9E3779B97F4A7C15ULL;

double energy_from_state(const sim::Statevector &sv, const std::vector<double> &diag) {
    return sim::kernels::weighted_probability_sum(sv.amplitudes(), diag);
}

double l2(const std::vector<double> &v) {
    double acc = 0.0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

} // namespace

std::vector<double> QaoaParams::flatten() const {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(2 * p));
    for (int k = 0; k < p; ++k) {
        flat.push_back(gamma[static_cast<std::size_t>(k)]);
        flat.push_back(beta[static_cast<std::size_t>(k)]);
    }
    return flat;
}

QaoaParams QaoaParams::from_flat(std::span<const double> flat) {
    require<ParameterBindingError>(!flat.empty() && flat.size() % 2 == 0,
                                   "qaoa: flat parameter vector must have even, positive length");
    QaoaParams out;
    out.p = static_cast<int>(flat.size() / 2);
    for (std::size_t k = 0; k < flat.size(); k += 2) {
        out.gamma.push_back(flat[k]);
        out.beta.push_back(flat[k + 1]);
    }
    return out;
}

sim::ParameterizedCircuit build_qaoa_circuit(const CostHamiltonian &cost, int p) {
    require<ConfigError>(p >= 1, "qaoa: p must be >= 1");
    require<ConfigError>(!cost.single_z.empty() || !cost.double_z.empty(),
                         "qaoa: cost Hamiltonian has no Z terms");
    const int n = cost.n_qubits;
    sim::ParameterizedCircuit circuit(n, 2 * p);
    for (int q = 0; q < n; ++q) {
        circuit.h(q);
    }
    for (int k = 0; k < p; ++k) {
        const int gamma = 2 * k;
        const int beta = 2 * k + 1;
        for (const auto &[q, w] : cost.single_z) {
            circuit.rz(q, sim::ParamRef{gamma, 2.0 * w});
        }
        for (const auto &[key, w] : cost.double_z) {
            const auto [i, j] = key;
            circuit.h(j).cz(i, j).h(j);
            circuit.rz(j, sim::ParamRef{gamma, 2.0 * w});
            circuit.h(j).cz(i, j).h(j);
        }
        for (int q = 0; q < n; ++q) {
            circuit.rx(q, sim::ParamRef{beta, 2.0});
        }
    }
    return circuit;
}

double qaoa_energy(const CostHamiltonian &cost, const sim::ParameterizedCircuit &circuit,
                   std::span<const double> params) {
    require<ParameterBindingError>(circuit.n_qubits() == cost.n_qubits,
                                   "qaoa: circuit and cost act on different registers");
    require<ParameterBindingError>(params.size() == static_cast<std::size_t>(circuit.n_params()),
                                   "qaoa: expected " + std::to_string(circuit.n_params()) +
                                       " parameters, got " + std::to_string(params.size()));
    return energy_from_state(sim::run(circuit, params), cost.diagonal());
}

OptimizeResult optimize(const CostHamiltonian &cost, int p, const OptimizeConfig &config,
                        std::uint64_t seed) {
    require<ConfigError>(config.steps >= 0, "qaoa: step count must be >= 0");
    require<ConfigError>(config.learning_rate > 0.0, "qaoa: learning rate must be positive");
    require<ConfigError>(config.max_halvings >= 0, "qaoa: max_halvings must be >= 0");

    const auto circuit = build_qaoa_circuit(cost, p);
    const auto diag = cost.diagonal();
    auto energy_at = [&](const std::vector<double> &params) {
        const double e = energy_from_state(sim::run(circuit, params), diag);
        if (!std::isfinite(e)) {
            throw OptimizationError("qaoa: energy became non-finite");
        }
        return e;
    };
    const sim::Objective objective = [&diag](const sim::Statevector &sv) {
        return energy_from_state(sv, diag);
    };

    std::vector<double> params(static_cast<std::size_t>(2 * p), 0.0);
    if (!config.zero_init) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> init(-config.init_range, config.init_range);
        for (auto &v : params) {
            v = init(rng);
        }
    }

    OptimizeResult result;
    double energy = energy_at(params);
    result.trace.push_back({0, energy, l2(sim::param_shift_gradient(circuit, params, objective))});

    for (int step = 1; step <= config.steps; ++step) {
        const auto grad = sim::param_shift_gradient(circuit, params, objective);
        double rate = config.learning_rate;
        const int attempts = config.step_halving ? config.max_halvings + 1 : 1;
        for (int a = 0; a < attempts; ++a) {
            std::vector<double> candidate = params;
            for (std::size_t k = 0; k < candidate.size(); ++k) {
                candidate[k] -= rate * grad[k];
            }
            const double e = energy_at(candidate);
            if (!config.step_halving || e <= energy + kMonotoneSlack) {
                params = std::move(candidate);
                energy = e;
                break;
            }
            rate /= 2.0;
        }
        result.trace.push_back({step, energy, l2(grad)});
    }
    result.params = QaoaParams::from_flat(params);
    return result;
}

SolveResult solve_mqo_qaoa(const mqo::MqoProblem &problem, const SolveConfig &config,
                           std::uint64_t seed) {
    problem.validate();
    require<SizeError>(problem.plan_count() <= kMaxQaoaPlans,
                       "qaoa: at most 20 plans are simulated, instance has " +
                           std::to_string(problem.plan_count()));
    require<ConfigError>(config.shots >= 1, "qaoa: shots must be >= 1");

    SolveResult out;
    out.weights = mqo::default_weights(problem, config.epsilon);
    out.qubo = mqo::build_qubo(problem, out.weights);
    out.cost = cost_hamiltonian_from_ising(qubo::qubo_to_ising(out.qubo));
    out.optimization = optimize(out.cost, config.p, config.optimizer, seed);
    out.final_energy = out.optimization.trace.back().energy;

    const auto circuit = build_qaoa_circuit(out.cost, config.p);
    const auto state = sim::run(circuit, out.optimization.params.flatten());
    const auto counts = sim::sample(state, config.shots, seed ^ kSampleStream);

    for (const auto &[bits, count] : counts) {
        RankedSolution sol;
        sol.bitstring = bits;
        sol.count = count;
        sol.frequency = static_cast<double>(count) / static_cast<double>(config.shots);
        std::vector<int> x(bits.size());
        std::transform(bits.begin(), bits.end(), x.begin(), [](char c) { return c == '1' ? 1 : 0; });
        sol.qubo_energy = qubo::evaluate(out.qubo, x);
        sol.decoded = mqo::decode(x, problem);
        out.ranked.push_back(std::move(sol));
    }
    std::stable_sort(out.ranked.begin(), out.ranked.end(),
                     [](const RankedSolution &a, const RankedSolution &b) { return a.count > b.count; });
    return out;
}

} // namespace qstack::qaoa
