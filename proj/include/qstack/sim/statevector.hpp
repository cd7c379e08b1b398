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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qstack::sim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;

/// Basis-index mask of `qubit` in an `n_qubits` register. Qubit 0 is the
/// most significant bit, so basis index k is the big-endian reading of the
/// bitstring whose leftmost character is qubit 0.
constexpr std::uint64_t qubit_mask(int n_qubits, int qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

/// Renders basis index `index` as an `n_qubits` character bitstring,
/// qubit 0 first.
std::string to_bitstring(std::uint64_t index, int n_qubits);

/// Inverse of to_bitstring. Throws ShapeError on characters other than 0/1.
std::uint64_t from_bitstring(const std::string &bits);

/**
 * Dense pure state of an n-qubit register.
 *
 * Always holds exactly 2^n amplitudes. Gate application keeps the norm at
 * one; the constructors from raw amplitudes do not normalise for you.
 */
class Statevector {
  public:
    /// |0...0> on `n_qubits` qubits. Throws ConfigError outside [1, 24].
    static Statevector zero(int n_qubits);

    /// Wraps caller-supplied amplitudes. Throws ShapeError unless
    /// amplitudes.size() == 2^n_qubits.
    static Statevector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }

    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    [[nodiscard]] double norm() const;

    /// |amplitude|^2 per basis index.
    [[nodiscard]] std::vector<double> probabilities() const;

  private:
    Statevector(int n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

inline Statevector init_zero_state(int n_qubits) { return Statevector::zero(n_qubits); }

} // namespace qstack::sim
