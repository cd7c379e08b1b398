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
#include <functional>
#include <span>
#include <vector>

#include "qstack/sim/circuit.hpp"
#include "qstack/sim/observable.hpp"

namespace qstack::sim {

/// Scalar read-out of a final state. Must be safe to call concurrently.
using Objective = std::function<double(const Statevector &)>;

/**
 * Parameter-shift gradient of objective(run(circuit, params)).
 *
 * For every gate occurrence reading slot k with scale c, the circuit is
 * re-run with that gate's angle moved by +pi/2 and -pi/2, and
 * c * (E+ - E-) / 2 is added to component k. This is exact for the
 * exp(-i theta P / 2) rotations used here. The shifted executions are
 * independent and run on the OpenMP pool; accumulation happens afterwards in
 * gate order so the result does not depend on the thread count.
 */
std::vector<double> param_shift_gradient(const ParameterizedCircuit &circuit,
                                         std::span<const double> params,
                                         const Objective &objective);

std::vector<double> param_shift_gradient(const ParameterizedCircuit &circuit,
                                         std::span<const double> params,
                                         const PauliObservable &obs);

/// Circuit executions one call to param_shift_gradient performs.
std::size_t shift_evaluation_count(const ParameterizedCircuit &circuit);

} // namespace qstack::sim
