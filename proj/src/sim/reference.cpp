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

#include "qstack/sim/reference.hpp"

#include <cstdint>

namespace qstack::sim::reference {

void apply_single(std::span<Complex> amps, int n_qubits, int qubit, const Matrix2 &m) {
    const std::uint64_t mask = qubit_mask(n_qubits, qubit);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const std::uint64_t j = i | mask;
        const Complex a0 = amps[i];
        const Complex a1 = amps[j];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[j] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cz(std::span<Complex> amps, int n_qubits, int a, int b) {
    const std::uint64_t ma = qubit_mask(n_qubits, a);
    const std::uint64_t mb = qubit_mask(n_qubits, b);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & ma) && (i & mb)) {
            amps[i] = -amps[i];
        }
    }
}

void apply(std::span<Complex> amps, int n_qubits, const GateOp &gate, double angle) {
    if (gate.kind == GateKind::CZ) {
        apply_cz(amps, n_qubits, gate.qubits[0], gate.qubits[1]);
    } else {
        apply_single(amps, n_qubits, gate.qubits[0], single_qubit_matrix(gate.kind, angle));
    }
}

double weighted_probability_sum(std::span<const Complex> amps, std::span<const double> weights) {
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        total += weights[i] * std::norm(amps[i]);
    }
    return total;
}

} // namespace qstack::sim::reference
