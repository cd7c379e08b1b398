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

#include "qstack/sim/circuit.hpp"

#include <algorithm>
#include <string>

#include "qstack/common/error.hpp"
#include "qstack/sim/statevector.hpp"

namespace qstack::sim {

ParameterizedCircuit::ParameterizedCircuit(int n_qubits, int n_params)
    : n_qubits_(n_qubits), n_params_(n_params) {
    require<ConfigError>(n_qubits >= 1 && n_qubits <= kMaxQubits,
                         "n_qubits must lie in [1, 24], got " + std::to_string(n_qubits));
    require<ConfigError>(n_params >= 0, "n_params must be non-negative");
}

ParameterizedCircuit &ParameterizedCircuit::add(const GateOp &gate) {
    const std::string name(to_string(gate.kind));
    auto in_range = [this](int q) { return q >= 0 && q < n_qubits_; };
    require<ConfigError>(in_range(gate.qubits[0]), name + ": qubit index out of range");
    if (is_two_qubit(gate.kind)) {
        require<ConfigError>(in_range(gate.qubits[1]), name + ": qubit index out of range");
        require<ConfigError>(gate.qubits[0] != gate.qubits[1], name + ": operands must differ");
    }
    if (is_rotation(gate.kind)) {
        require<ConfigError>(!std::holds_alternative<std::monostate>(gate.angle),
                             name + ": rotation needs an angle");
    } else {
        require<UnsupportedGradientError>(!gate.is_parameterized(),
                                          name + ": parameters may only feed rotation gates");
        require<ConfigError>(std::holds_alternative<std::monostate>(gate.angle),
                             name + ": gate takes no angle");
    }
    if (const auto *ref = std::get_if<ParamRef>(&gate.angle)) {
        require<ParameterBindingError>(ref->index >= 0 && ref->index < n_params_,
                                       name + ": parameter index " + std::to_string(ref->index) +
                                           " outside [0, " + std::to_string(n_params_) + ")");
    }
    ops_.push_back(gate);
    return *this;
}

std::size_t ParameterizedCircuit::parameter_occurrences() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const GateOp &g) { return g.is_parameterized(); }));
}

void ParameterizedCircuit::validate() const {
    std::vector<bool> used(static_cast<std::size_t>(n_params_), false);
    for (const auto &op : ops_) {
        if (const auto *ref = std::get_if<ParamRef>(&op.angle)) {
            used[static_cast<std::size_t>(ref->index)] = true;
        }
    }
    const auto unused = std::find(used.begin(), used.end(), false);
    require<ConfigError>(unused == used.end(),
                         "parameter slot " + std::to_string(unused - used.begin()) +
                             " feeds no gate");
}

} // namespace qstack::sim
