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

#include "qstack/sim/executor.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <vector>

#include "qstack/common/error.hpp"
#include "qstack/sim/kernels.hpp"

namespace qstack::sim {

namespace {

std::atomic<std::uint64_t> g_executions{0};

void check_operands(const Statevector &sv, const GateOp &gate) {
    const int n = sv.n_qubits();
    auto in_range = [n](int q) { return q >= 0 && q < n; };
    require<ConfigError>(in_range(gate.qubits[0]), "gate qubit index out of range");
    if (is_two_qubit(gate.kind)) {
        require<ConfigError>(in_range(gate.qubits[1]), "gate qubit index out of range");
        require<ConfigError>(gate.qubits[0] != gate.qubits[1], "CZ operands must differ");
    }
}

double angle_of(const GateOp &gate, std::span<const double> params) {
    return is_rotation(gate.kind) ? resolve_angle(gate, params) : 0.0;
}

} // namespace

void apply_gate_in_place(Statevector &sv, const GateOp &gate, std::span<const double> params) {
    check_operands(sv, gate);
    kernels::apply(sv.amplitudes(), sv.n_qubits(), gate, angle_of(gate, params));
}

Statevector apply_gate(Statevector sv, const GateOp &gate, std::span<const double> params) {
    apply_gate_in_place(sv, gate, params);
    return sv;
}

Statevector run(const ParameterizedCircuit &circuit, std::span<const double> params,
                std::optional<AngleShift> shift) {
    require<ParameterBindingError>(params.size() == static_cast<std::size_t>(circuit.n_params()),
                                   "run: circuit has " + std::to_string(circuit.n_params()) +
                                       " parameters, got " + std::to_string(params.size()));
    circuit.validate();
    if (shift) {
        require<ConfigError>(shift->op_index < circuit.size() &&
                                 is_rotation(circuit.ops()[shift->op_index].kind),
                             "run: angle shift must target a rotation gate");
    }
    g_executions.fetch_add(1, std::memory_order_relaxed);
    auto sv = Statevector::zero(circuit.n_qubits());
    const auto &ops = circuit.ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        double angle = angle_of(ops[k], params);
        if (shift && shift->op_index == k) {
            angle += shift->delta;
        }
        kernels::apply(sv.amplitudes(), sv.n_qubits(), ops[k], angle);
    }
    return sv;
}

std::uint64_t executions_performed() { return g_executions.load(std::memory_order_relaxed); }

Counts sample(const Statevector &sv, std::uint64_t shots, std::uint64_t seed) {
    require<ConfigError>(shots >= 1, "sample: shots must be positive");
    const auto probs = sv.probabilities();
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    const double total = cumulative.back();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, total);
    std::vector<std::uint64_t> hits(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        // Skip zero-probability bins the bisection can land on at the edge.
        auto idx = static_cast<std::size_t>(std::min<std::ptrdiff_t>(
            it - cumulative.begin(), static_cast<std::ptrdiff_t>(probs.size()) - 1));
        while (probs[idx] == 0.0 && idx > 0) {
            --idx;
        }
        ++hits[idx];
    }

    Counts counts;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] > 0) {
            counts.emplace(to_bitstring(i, sv.n_qubits()), hits[i]);
        }
    }
    return counts;
}

} // namespace qstack::sim
