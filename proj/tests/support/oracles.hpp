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

// Independent oracles for the test suites. Nothing here calls the library's
// kernels or solvers: gates become dense matrices built from their textbook
// definitions, energies are summed straight from the model maps, and the
// chain MDP is solved by its own value iteration.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qstack/qubo/model.hpp"
#include "qstack/sim/circuit.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// Row-major dim x dim complex matrix.
struct Dense {
    std::size_t dim = 0;
    std::vector<Complex> a;

    explicit Dense(std::size_t d) : dim(d), a(d * d) {}

    static Dense identity(std::size_t d) {
        Dense m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    Complex &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Dense matmul(const Dense &x, const Dense &y) {
    Dense out(x.dim);
    for (std::size_t r = 0; r < x.dim; ++r) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const Complex v = x(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < x.dim; ++c) {
                out(r, c) += v * y(k, c);
            }
        }
    }
    return out;
}

inline Dense kron(const Dense &x, const Dense &y) {
    Dense out(x.dim * y.dim);
    for (std::size_t r1 = 0; r1 < x.dim; ++r1) {
        for (std::size_t c1 = 0; c1 < x.dim; ++c1) {
            for (std::size_t r2 = 0; r2 < y.dim; ++r2) {
                for (std::size_t c2 = 0; c2 < y.dim; ++c2) {
                    out(r1 * y.dim + r2, c1 * y.dim + c2) = x(r1, c1) * y(r2, c2);
                }
            }
        }
    }
    return out;
}

inline Dense mat2(Complex a, Complex b, Complex c, Complex d) {
    Dense m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

inline Dense pauli(char p) {
    const Complex i{0.0, 1.0};
    switch (p) {
    case 'X':
        return mat2(0, 1, 1, 0);
    case 'Y':
        return mat2(0, -i, i, 0);
    case 'Z':
        return mat2(1, 0, 0, -1);
    default:
        return Dense::identity(2);
    }
}

/// exp(-i theta P / 2) = cos(theta/2) I - i sin(theta/2) P.
inline Dense rotation(char p, double theta) {
    const Dense P = pauli(p);
    Dense m(2);
    const Complex c = std::cos(theta / 2.0);
    const Complex s = Complex{0.0, -std::sin(theta / 2.0)};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t col = 0; col < 2; ++col) {
            m(r, col) = (r == col ? c : Complex{}) + s * P(r, col);
        }
    }
    return m;
}

/// Operator acting as `m` on qubit q of n, qubit 0 being the leftmost factor.
inline Dense embed(int n, int q, const Dense &m) {
    Dense out = q == 0 ? m : Dense::identity(2);
    for (int k = 1; k < n; ++k) {
        out = kron(out, k == q ? m : Dense::identity(2));
    }
    return out;
}

/// Tensor product of a Pauli string, character k on qubit k.
inline Dense pauli_string(const std::string &s) {
    Dense out = pauli(s[0]);
    for (std::size_t k = 1; k < s.size(); ++k) {
        out = kron(out, pauli(s[k]));
    }
    return out;
}

/// CZ = |0><0| (x) I + |1><1| (x) Z on qubits (a, b).
inline Dense cz(int n, int a, int b) {
    const Dense p0 = mat2(1, 0, 0, 0);
    const Dense p1 = mat2(0, 0, 0, 1);
    Dense lhs = embed(n, a, p0);
    Dense rhs = matmul(embed(n, a, p1), embed(n, b, pauli('Z')));
    for (std::size_t i = 0; i < lhs.a.size(); ++i) {
        lhs.a[i] += rhs.a[i];
    }
    return lhs;
}

inline double angle_of(const qstack::sim::GateOp &op, const std::vector<double> &params) {
    if (const auto *v = std::get_if<double>(&op.angle)) {
        return *v;
    }
    const auto &ref = std::get<qstack::sim::ParamRef>(op.angle);
    return ref.scale * params[static_cast<std::size_t>(ref.index)];
}

inline Dense gate_unitary(int n, const qstack::sim::GateOp &op, const std::vector<double> &params) {
    using qstack::sim::GateKind;
    const double r = std::sqrt(0.5);
    switch (op.kind) {
    case GateKind::H:
        return embed(n, op.qubits[0], mat2(r, r, r, -r));
    case GateKind::X:
        return embed(n, op.qubits[0], pauli('X'));
    case GateKind::RX:
        return embed(n, op.qubits[0], rotation('X', angle_of(op, params)));
    case GateKind::RY:
        return embed(n, op.qubits[0], rotation('Y', angle_of(op, params)));
    case GateKind::RZ:
        return embed(n, op.qubits[0], rotation('Z', angle_of(op, params)));
    case GateKind::CZ:
        return cz(n, op.qubits[0], op.qubits[1]);
    }
    return Dense::identity(std::size_t{1} << n);
}

/// Product of the dense gate unitaries applied to |0...0>.
inline std::vector<Complex> run(const qstack::sim::ParameterizedCircuit &c, const std::vector<double> &params) {
    const int n = c.n_qubits();
    Dense u = Dense::identity(std::size_t{1} << n);
    for (const auto &op : c.ops()) {
        u = matmul(gate_unitary(n, op, params), u);
    }
    std::vector<Complex> out(u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
        out[r] = u(r, 0);
    }
    return out;
}

inline Complex expectation(const std::vector<Complex> &psi, const Dense &op) {
    Complex acc{};
    for (std::size_t r = 0; r < op.dim; ++r) {
        Complex row{};
        for (std::size_t c = 0; c < op.dim; ++c) {
            row += op(r, c) * psi[c];
        }
        acc += std::conj(psi[r]) * row;
    }
    return acc;
}

/// Random circuit over all gate kinds. About half of the rotations read a
/// parameter slot (sometimes with a non-unit scale); slots left unused get a
/// trailing RY so the circuit stays valid.
inline qstack::sim::ParameterizedCircuit random_circuit(int n, int n_gates, int n_params, std::mt19937_64 &rng) {
    using namespace qstack::sim;
    ParameterizedCircuit c(n, n_params);
    std::uniform_int_distribution<int> kind(0, n >= 2 ? 5 : 4);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> scale(-2.0, 2.0);
    std::vector<bool> used(static_cast<std::size_t>(n_params), false);
    auto pick_angle = [&]() -> Angle {
        if (n_params == 0 || rng() % 2 == 0) {
            return angle(rng);
        }
        const int idx = static_cast<int>(rng() % static_cast<std::uint64_t>(n_params));
        used[static_cast<std::size_t>(idx)] = true;
        return ParamRef{idx, rng() % 3 == 0 ? scale(rng) : 1.0};
    };
    for (int g = 0; g < n_gates; ++g) {
        const int q = qubit(rng);
        switch (kind(rng)) {
        case 0:
            c.h(q);
            break;
        case 1:
            c.x(q);
            break;
        case 2:
            c.rx(q, pick_angle());
            break;
        case 3:
            c.ry(q, pick_angle());
            break;
        case 4:
            c.rz(q, pick_angle());
            break;
        default: {
            int b = qubit(rng);
            while (b == q) {
                b = qubit(rng);
            }
            c.cz(q, b);
        }
        }
    }
    for (int k = 0; k < n_params; ++k) {
        if (!used[static_cast<std::size_t>(k)]) {
            c.ry(qubit(rng), ParamRef{k, 1.0});
        }
    }
    return c;
}

/// Central difference of f along every coordinate.
inline std::vector<double> finite_difference(const std::function<double(const std::vector<double> &)> &f,
                                             std::vector<double> x, double h = 1e-5) {
    std::vector<double> g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double keep = x[k];
        x[k] = keep + h;
        const double up = f(x);
        x[k] = keep - h;
        const double down = f(x);
        x[k] = keep;
        g[k] = (up - down) / (2.0 * h);
    }
    return g;
}

inline std::vector<int> bits_of_index(std::uint64_t idx, int n) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = static_cast<int>((idx >> (n - 1 - i)) & 1U);
    }
    return x;
}

inline double qubo_energy(const qstack::qubo::QuboModel &m, const std::vector<int> &x) {
    double e = m.offset;
    for (const auto &[i, c] : m.linear) {
        e += c * x[static_cast<std::size_t>(i)];
    }
    for (const auto &[ij, c] : m.quadratic) {
        e += c * x[static_cast<std::size_t>(ij.first)] * x[static_cast<std::size_t>(ij.second)];
    }
    return e;
}

inline double ising_energy(const qstack::qubo::IsingModel &m, const std::vector<int> &s) {
    double e = m.offset;
    for (const auto &[i, c] : m.h) {
        e += c * s[static_cast<std::size_t>(i)];
    }
    for (const auto &[ij, c] : m.J) {
        e += c * s[static_cast<std::size_t>(ij.first)] * s[static_cast<std::size_t>(ij.second)];
    }
    return e;
}

/// Energy table over all 2^n assignments in big-endian index order.
inline std::vector<double> qubo_table(const qstack::qubo::QuboModel &m) {
    std::vector<double> t(std::size_t{1} << m.n_vars);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
        t[i] = qubo_energy(m, bits_of_index(i, m.n_vars));
    }
    return t;
}

/// Ising table indexed by the bit pattern under x = (1 - s) / 2.
inline std::vector<double> ising_table(const qstack::qubo::IsingModel &m) {
    std::vector<double> t(std::size_t{1} << m.n_spins);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
        auto s = bits_of_index(i, m.n_spins);
        for (auto &v : s) {
            v = 1 - 2 * v;
        }
        t[i] = ising_energy(m, s);
    }
    return t;
}

/// (min energy, smallest index reaching it) by plain enumeration.
inline std::pair<double, std::uint64_t> qubo_minimum(const qstack::qubo::QuboModel &m) {
    const auto t = qubo_table(m);
    std::uint64_t best = 0;
    for (std::uint64_t i = 1; i < t.size(); ++i) {
        if (t[i] < t[best] - 1e-12 * std::max(1.0, std::abs(t[best]))) {
            best = i;
        }
    }
    return {t[best], best};
}

inline qstack::qubo::QuboModel random_qubo(int n, std::mt19937_64 &rng, double density = 0.6) {
    qstack::qubo::QuboModel m(n);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        if (unit(rng) < 0.8) {
            m.add_linear(i, coef(rng));
        }
        for (int j = i + 1; j < n; ++j) {
            if (unit(rng) < density) {
                m.add_quadratic(i, j, coef(rng));
            }
        }
    }
    m.offset = coef(rng);
    return m;
}

inline qstack::qubo::IsingModel random_ising(int n, std::mt19937_64 &rng) {
    qstack::qubo::IsingModel m(n);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int i = 0; i < n; ++i) {
        m.add_field(i, coef(rng));
        for (int j = i + 1; j < n; ++j) {
            if (rng() % 2) {
                m.add_coupling(i, j, coef(rng));
            }
        }
    }
    m.offset = coef(rng);
    return m;
}

/// Q*(cell, action) for the five-cell corridor: cells 0..3 live, 4 is the
/// goal paying +1 on entry, left from 0 stays at 0.
inline std::vector<std::array<double, 2>> chain_q_star(double gamma) {
    std::array<double, 5> v{};
    std::vector<std::array<double, 2>> q(4);
    for (int it = 0; it < 2000; ++it) {
        for (int c = 0; c < 4; ++c) {
            const int left = c == 0 ? 0 : c - 1;
            const int right = c + 1;
            q[static_cast<std::size_t>(c)][0] = gamma * v[static_cast<std::size_t>(left)];
            q[static_cast<std::size_t>(c)][1] = right == 4 ? 1.0 : gamma * v[static_cast<std::size_t>(right)];
        }
        for (int c = 0; c < 4; ++c) {
            v[static_cast<std::size_t>(c)] = std::max(q[static_cast<std::size_t>(c)][0], q[static_cast<std::size_t>(c)][1]);
        }
    }
    return q;
}

} // namespace oracle
