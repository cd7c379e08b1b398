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

#include "qstack/sim/statevector.hpp"

#include <cmath>

#include "qstack/common/error.hpp"
#include "qstack/sim/gate.hpp"

namespace qstack::sim {

std::string to_bitstring(std::uint64_t index, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index & qubit_mask(n_qubits, q)) {
            bits[static_cast<std::size_t>(q)] = '1';
        }
    }
    return bits;
}

std::uint64_t from_bitstring(const std::string &bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        require<ShapeError>(c == '0' || c == '1', "bitstring may only contain '0' and '1'");
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

Statevector Statevector::zero(int n_qubits) {
    require<ConfigError>(n_qubits >= 1 && n_qubits <= kMaxQubits,
                         "n_qubits must lie in [1, 24], got " + std::to_string(n_qubits));
    std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    return Statevector(n_qubits, std::move(amps));
}

Statevector Statevector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
    require<ConfigError>(n_qubits >= 1 && n_qubits <= kMaxQubits,
                         "n_qubits must lie in [1, 24], got " + std::to_string(n_qubits));
    require<ShapeError>(amplitudes.size() == (std::size_t{1} << n_qubits),
                        "amplitude count must equal 2^n_qubits");
    return Statevector(n_qubits, std::move(amplitudes));
}

double Statevector::norm() const {
    double acc = 0.0;
    for (const auto &a : amplitudes_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> probs(amplitudes_.size());
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        probs[i] = std::norm(amplitudes_[i]);
    }
    return probs;
}

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CZ:
        return "CZ";
    }
    return "?";
}

double resolve_angle(const GateOp &gate, std::span<const double> params) {
    if (const auto *constant = std::get_if<double>(&gate.angle)) {
        return *constant;
    }
    if (const auto *ref = std::get_if<ParamRef>(&gate.angle)) {
        require<ParameterBindingError>(ref->index >= 0 &&
                                           static_cast<std::size_t>(ref->index) < params.size(),
                                       "parameter index " + std::to_string(ref->index) +
                                           " is not bound (have " +
                                           std::to_string(params.size()) + " values)");
        return ref->scale * params[static_cast<std::size_t>(ref->index)];
    }
    throw ConfigError(std::string(to_string(gate.kind)) + " gate carries no angle");
}

} // namespace qstack::sim
