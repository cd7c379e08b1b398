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

#include <cstddef>
#include <vector>

#include "qstack/sim/gate.hpp"

namespace qstack::sim {

/**
 * Ordered gate list over a fixed register with `n_params` symbolic slots.
 *
 * Gates are checked on insertion (qubit range, distinct CZ operands, angle
 * presence). A parameter reference on a non-rotation gate raises
 * UnsupportedGradientError since no shift rule exists for it. The
 * "every slot is used" invariant can only be checked once the circuit is
 * complete; validate() does that and run()/gradients call it.
 */
class ParameterizedCircuit {
  public:
    ParameterizedCircuit(int n_qubits, int n_params);

    ParameterizedCircuit &add(const GateOp &gate);

    ParameterizedCircuit &h(int q) { return add(GateOp::h(q)); }
    ParameterizedCircuit &x(int q) { return add(GateOp::x(q)); }
    ParameterizedCircuit &rx(int q, Angle a) { return add(GateOp::rx(q, a)); }
    ParameterizedCircuit &ry(int q, Angle a) { return add(GateOp::ry(q, a)); }
    ParameterizedCircuit &rz(int q, Angle a) { return add(GateOp::rz(q, a)); }
    ParameterizedCircuit &cz(int a, int b) { return add(GateOp::cz(a, b)); }

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] int n_params() const noexcept { return n_params_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

    /// Number of gates reading parameter slots, counting reuse.
    [[nodiscard]] std::size_t parameter_occurrences() const;

    /// Throws ConfigError if some parameter slot feeds no gate.
    void validate() const;

  private:
    int n_qubits_;
    int n_params_;
    std::vector<GateOp> ops_;
};

} // namespace qstack::sim
