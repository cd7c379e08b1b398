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

#include <array>
#include <span>
#include <string_view>
#include <variant>

namespace qstack::sim {

/// Supported gates. Rotations follow R_P(theta) = exp(-i theta P / 2).
enum class GateKind { H, X, RX, RY, RZ, CZ };

std::string_view to_string(GateKind kind);

constexpr bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

constexpr bool is_two_qubit(GateKind kind) { return kind == GateKind::CZ; }

/// Reference into a parameter vector. The gate angle is scale * params[index].
/// QAOA uses the scale to fold Hamiltonian weights into a shared angle.
struct ParamRef {
    int index = 0;
    double scale = 1.0;

    friend bool operator==(const ParamRef &, const ParamRef &) = default;
};

/// No angle (H, X, CZ), a fixed angle in radians, or a parameter reference.
using Angle = std::variant<std::monostate, double, ParamRef>;

struct GateOp {
    GateKind kind = GateKind::H;
    std::array<int, 2> qubits{0, -1};
    Angle angle{};

    static GateOp h(int q) { return {GateKind::H, {q, -1}, {}}; }
    static GateOp x(int q) { return {GateKind::X, {q, -1}, {}}; }
    static GateOp rx(int q, Angle a) { return {GateKind::RX, {q, -1}, a}; }
    static GateOp ry(int q, Angle a) { return {GateKind::RY, {q, -1}, a}; }
    static GateOp rz(int q, Angle a) { return {GateKind::RZ, {q, -1}, a}; }
    static GateOp cz(int a, int b) { return {GateKind::CZ, {a, b}, {}}; }

    [[nodiscard]] bool is_parameterized() const {
        return std::holds_alternative<ParamRef>(angle);
    }

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Resolves the gate angle against `params`. Throws ParameterBindingError for
/// an out-of-range reference and ConfigError when the gate carries no angle.
double resolve_angle(const GateOp &gate, std::span<const double> params);

} // namespace qstack::sim
