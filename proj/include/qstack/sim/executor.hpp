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
#include <map>
#include <optional>
#include <span>
#include <string>

#include "qstack/sim/circuit.hpp"
#include "qstack/sim/statevector.hpp"

namespace qstack::sim {

/// Adds `delta` radians to the angle of gate `op_index` for one execution.
/// This is how the shift rule moves a single occurrence of a shared slot.
struct AngleShift {
    std::size_t op_index = 0;
    double delta = 0.0;
};

/// Applies `gate` in place, resolving its angle from `params`.
void apply_gate_in_place(Statevector &sv, const GateOp &gate, std::span<const double> params);

/// Value-returning form of apply_gate_in_place.
Statevector apply_gate(Statevector sv, const GateOp &gate, std::span<const double> params);

/// Executes `circuit` from |0...0>. Throws ParameterBindingError unless
/// params.size() == circuit.n_params().
Statevector run(const ParameterizedCircuit &circuit, std::span<const double> params,
                std::optional<AngleShift> shift = std::nullopt);

/// Process-wide count of run() calls so far. Benchmarks diff it around a
/// region to count circuit executions.
std::uint64_t executions_performed();

/// Bitstring (qubit 0 first) -> number of hits.
using Counts = std::map<std::string, std::uint64_t>;

/// Draws `shots` computational-basis samples from |amplitude|^2 with an
/// mt19937_64 stream seeded by `seed`. Throws ConfigError for shots == 0.
Counts sample(const Statevector &sv, std::uint64_t shots, std::uint64_t seed);

} // namespace qstack::sim
