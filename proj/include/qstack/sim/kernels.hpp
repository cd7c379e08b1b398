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

/**
 * @file kernels.hpp
 * OpenMP statevector kernels.
 *
 * Every kernel works in place on a span of 2^n amplitudes and uses the
 * big-endian qubit convention of statevector.hpp. Loops go parallel once the
 * register reaches parallel::kKernelThreshold amplitudes. The serial
 * counterparts in reference.hpp compute the same maps and are what the tests
 * and the benchmark compare against.
 */
#pragma once

#include <array>
#include <span>

#include "qstack/sim/gate.hpp"
#include "qstack/sim/statevector.hpp"

namespace qstack::sim {

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

/// Dense matrix of a single-qubit gate. `angle` is ignored for H and X.
Matrix2 single_qubit_matrix(GateKind kind, double angle);

namespace kernels {

void apply_single(std::span<Complex> amps, int n_qubits, int qubit, const Matrix2 &m);
void apply_h(std::span<Complex> amps, int n_qubits, int qubit);
void apply_x(std::span<Complex> amps, int n_qubits, int qubit);
void apply_rx(std::span<Complex> amps, int n_qubits, int qubit, double angle);
void apply_ry(std::span<Complex> amps, int n_qubits, int qubit, double angle);
void apply_rz(std::span<Complex> amps, int n_qubits, int qubit, double angle);
void apply_cz(std::span<Complex> amps, int n_qubits, int a, int b);

/// Dispatches on gate.kind with an already-resolved angle.
void apply(std::span<Complex> amps, int n_qubits, const GateOp &gate, double angle);

/// Sum of `weights[i] * |amps[i]|^2`. Partial sums are taken over a fixed
/// chunking and added in order, so the result does not depend on the thread
/// count.
double weighted_probability_sum(std::span<const Complex> amps, std::span<const double> weights);

} // namespace kernels

} // namespace qstack::sim
