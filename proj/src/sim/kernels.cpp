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

#include "qstack/sim/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"

namespace qstack::sim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::int64_t kReductionChunks = 64;

// Index of the k-th basis state whose bit at `bit` is zero.
inline std::uint64_t insert_zero_bit(std::uint64_t k, int bit) {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
    const std::uint64_t high = (k >> bit) << (bit + 1);
    return high | low;
}

inline bool use_threads(std::size_t dim) { return dim >= parallel::kKernelThreshold; }

// x * a + y * b spelled out in real arithmetic. std::complex multiplication
// carries NaN/inf recovery branches that block vectorisation in these loops.
inline Complex mul_add(Complex x, Complex a, Complex y, Complex b) {
    return {x.real() * a.real() - x.imag() * a.imag() + y.real() * b.real() - y.imag() * b.imag(),
            x.real() * a.imag() + x.imag() * a.real() + y.real() * b.imag() + y.imag() * b.real()};
}

} // namespace

Matrix2 single_qubit_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
    case GateKind::H:
        return {Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0},
                Complex{-kInvSqrt2, 0}};
    case GateKind::X:
        return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
    case GateKind::RX:
        return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
    case GateKind::RY:
        return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
    case GateKind::RZ:
        return {Complex{c, -s}, Complex{0, 0}, Complex{0, 0}, Complex{c, s}};
    case GateKind::CZ:
        break;
    }
    throw ConfigError("single_qubit_matrix: CZ is a two-qubit gate");
}

namespace kernels {

void apply_single(std::span<Complex> amps, int n_qubits, int qubit, const Matrix2 &m) {
    const int bit = n_qubits - 1 - qubit;
    const std::uint64_t stride = std::uint64_t{1} << bit;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();
    const Complex m0 = m[0];
    const Complex m1 = m[1];
    const Complex m2 = m[2];
    const Complex m3 = m[3];
    parallel::for_range(half, use_threads(amps.size()), [=](std::int64_t k) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), bit);
        const std::uint64_t i1 = i0 | stride;
        const Complex a0 = data[i0];
        const Complex a1 = data[i1];
        data[i0] = mul_add(m0, a0, m1, a1);
        data[i1] = mul_add(m2, a0, m3, a1);
    });
}

void apply_h(std::span<Complex> amps, int n_qubits, int qubit) {
    const int bit = n_qubits - 1 - qubit;
    const std::uint64_t stride = std::uint64_t{1} << bit;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();
    parallel::for_range(half, use_threads(amps.size()), [=](std::int64_t k) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), bit);
        const std::uint64_t i1 = i0 | stride;
        const Complex a0 = data[i0];
        const Complex a1 = data[i1];
        data[i0] = (a0 + a1) * kInvSqrt2;
        data[i1] = (a0 - a1) * kInvSqrt2;
    });
}

void apply_x(std::span<Complex> amps, int n_qubits, int qubit) {
    const int bit = n_qubits - 1 - qubit;
    const std::uint64_t stride = std::uint64_t{1} << bit;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();
    parallel::for_range(half, use_threads(amps.size()), [=](std::int64_t k) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), bit);
        std::swap(data[i0], data[i0 | stride]);
    });
}

void apply_rx(std::span<Complex> amps, int n_qubits, int qubit, double angle) {
    apply_single(amps, n_qubits, qubit, single_qubit_matrix(GateKind::RX, angle));
}

void apply_ry(std::span<Complex> amps, int n_qubits, int qubit, double angle) {
    apply_single(amps, n_qubits, qubit, single_qubit_matrix(GateKind::RY, angle));
}

void apply_rz(std::span<Complex> amps, int n_qubits, int qubit, double angle) {
    const std::uint64_t mask = qubit_mask(n_qubits, qubit);
    const Complex phase0 = std::polar(1.0, -angle / 2.0);
    const Complex phase1 = std::polar(1.0, angle / 2.0);
    const auto dim = static_cast<std::int64_t>(amps.size());
    Complex *data = amps.data();
    parallel::for_range(dim, use_threads(amps.size()), [=](std::int64_t i) {
        const Complex ph = (static_cast<std::uint64_t>(i) & mask) ? phase1 : phase0;
        const Complex a = data[i];
        data[i] = {a.real() * ph.real() - a.imag() * ph.imag(), a.real() * ph.imag() + a.imag() * ph.real()};
    });
}

void apply_cz(std::span<Complex> amps, int n_qubits, int a, int b) {
    const std::uint64_t both = qubit_mask(n_qubits, a) | qubit_mask(n_qubits, b);
    const int lo_bit = n_qubits - 1 - std::max(a, b);
    const int hi_bit = n_qubits - 1 - std::min(a, b);
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    Complex *data = amps.data();
    parallel::for_range(quarter, use_threads(amps.size()), [=](std::int64_t k) {
        const std::uint64_t base =
            insert_zero_bit(insert_zero_bit(static_cast<std::uint64_t>(k), lo_bit), hi_bit);
        data[base | both] = -data[base | both];
    });
}

void apply(std::span<Complex> amps, int n_qubits, const GateOp &gate, double angle) {
    const int q = gate.qubits[0];
    switch (gate.kind) {
    case GateKind::H:
        apply_h(amps, n_qubits, q);
        return;
    case GateKind::X:
        apply_x(amps, n_qubits, q);
        return;
    case GateKind::RX:
        apply_rx(amps, n_qubits, q, angle);
        return;
    case GateKind::RY:
        apply_ry(amps, n_qubits, q, angle);
        return;
    case GateKind::RZ:
        apply_rz(amps, n_qubits, q, angle);
        return;
    case GateKind::CZ:
        apply_cz(amps, n_qubits, q, gate.qubits[1]);
        return;
    }
}

double weighted_probability_sum(std::span<const Complex> amps, std::span<const double> weights) {
    const auto dim = static_cast<std::int64_t>(amps.size());
    const std::int64_t chunks = use_threads(amps.size()) ? kReductionChunks : 1;
    const std::int64_t chunk_len = (dim + chunks - 1) / chunks;
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
    parallel::for_range(chunks, chunks > 1, [&](std::int64_t c) {
        const std::int64_t begin = c * chunk_len;
        const std::int64_t end = std::min(dim, begin + chunk_len);
        double acc = 0.0;
        for (std::int64_t i = begin; i < end; ++i) {
            acc += weights[static_cast<std::size_t>(i)] * std::norm(amps[static_cast<std::size_t>(i)]);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    });
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

} // namespace kernels

} // namespace qstack::sim
