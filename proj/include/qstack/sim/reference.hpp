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

#include <span>

#include "qstack/sim/kernels.hpp"

/// Serial reference kernels. Straight scans over the whole basis with no
/// index tricks; kept for testing and benchmarking the OpenMP kernels.
namespace qstack::sim::reference {

void apply_single(std::span<Complex> amps, int n_qubits, int qubit, const Matrix2 &m);
void apply_cz(std::span<Complex> amps, int n_qubits, int a, int b);
void apply(std::span<Complex> amps, int n_qubits, const GateOp &gate, double angle);
double weighted_probability_sum(std::span<const Complex> amps, std::span<const double> weights);

} // namespace qstack::sim::reference
