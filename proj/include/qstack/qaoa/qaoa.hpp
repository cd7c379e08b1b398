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
#include <span>
#include <string>
#include <vector>

#include "qstack/mqo/problem.hpp"
#include "qstack/qaoa/hamiltonian.hpp"
#include "qstack/qubo/model.hpp"
#include "qstack/sim/circuit.hpp"

namespace qstack::qaoa {

/// Layer angles. The flat circuit parameter order is gamma_1, beta_1, ...,
/// gamma_p, beta_p.
struct QaoaParams {
    int p = 0;
    std::vector<double> gamma;
    std::vector<double> beta;

    [[nodiscard]] std::vector<double> flatten() const;
    static QaoaParams from_flat(std::span<const double> flat);
};

/**
 * H on every qubit, then p layers of
 *   cost:  RZ(2 gamma_k w_i) per Z term, and per ZZ term the sequence
 *          H(j) CZ(i,j) H(j) RZ_j(2 gamma_k w_ij) H(j) CZ(i,j) H(j)
 *          (CNOT-conjugated RZ with each CNOT written as H CZ H),
 *   mixer: RX(2 beta_k) on every qubit.
 * Gate count: n + p * (|single_z| + 7 |double_z| + n). Throws ConfigError
 * for p < 1 or a cost with no Z terms (gamma would feed no gate).
 */
sim::ParameterizedCircuit build_qaoa_circuit(const CostHamiltonian &cost, int p);

/// Exact <C> of the circuit output, from the statevector (no shot noise).
double qaoa_energy(const CostHamiltonian &cost, const sim::ParameterizedCircuit &circuit,
                   std::span<const double> params);

struct OptimizeConfig {
    int steps = 200;
    double learning_rate = 0.05;
    /// Start from gamma = beta = 0 instead of uniform [-init_range, init_range].
    bool zero_init = false;
    double init_range = 0.1;
    /// Halve the step (per iteration, up to max_halvings times) until the
    /// energy does not increase; reject the step if none qualifies.
    bool step_halving = true;
    int max_halvings = 30;
};

struct TraceEntry {
    int step = 0;
    double energy = 0.0;
    double gradient_norm = 0.0;
};

struct OptimizeResult {
    QaoaParams params;
    /// Entry 0 is the initial point; entry k follows optimizer step k.
    std::vector<TraceEntry> trace;
};

/// Gradient descent on qaoa_energy with parameter-shift gradients.
/// Throws ConfigError on a bad config and OptimizationError when the energy
/// stops being finite.
OptimizeResult optimize(const CostHamiltonian &cost, int p, const OptimizeConfig &config,
                        std::uint64_t seed);

inline constexpr int kMaxQaoaPlans = 20;

struct SolveConfig {
    int p = 1;
    std::uint64_t shots = 4096;
    double epsilon = mqo::kDefaultEpsilon;
    OptimizeConfig optimizer{};
};

struct RankedSolution {
    std::string bitstring;
    std::uint64_t count = 0;
    double frequency = 0.0;
    double qubo_energy = 0.0;
    mqo::Decoded decoded;
};

struct SolveResult {
    mqo::PenaltyWeights weights;
    qubo::QuboModel qubo;
    CostHamiltonian cost;
    OptimizeResult optimization;
    double final_energy = 0.0;
    /// Sampled bitstrings by decreasing count, ties by bitstring.
    std::vector<RankedSolution> ranked;
};

/// build_qubo -> qubo_to_ising -> cost Hamiltonian -> optimize -> sample ->
/// decode. Throws SizeError above 20 plans.
SolveResult solve_mqo_qaoa(const mqo::MqoProblem &problem, const SolveConfig &config,
                           std::uint64_t seed);

} // namespace qstack::qaoa
