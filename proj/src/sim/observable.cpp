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

#include "qstack/sim/observable.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"

namespace qstack::sim {

namespace {

constexpr double kImaginaryTolerance = 1e-8;
constexpr std::int64_t kChunks = 64;

struct PauliMasks {
    std::uint64_t flip = 0;  // X or Y
    std::uint64_t sign = 0;  // Z or Y
    int y_count = 0;
};

PauliMasks masks_of(const std::string &paulis) {
    const int n = static_cast<int>(paulis.size());
    PauliMasks m;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = qubit_mask(n, q);
        switch (paulis[static_cast<std::size_t>(q)]) {
        case 'X':
            m.flip |= bit;
            break;
        case 'Y':
            m.flip |= bit;
            m.sign |= bit;
            ++m.y_count;
            break;
        case 'Z':
            m.sign |= bit;
            break;
        default:
            break;
        }
    }
    return m;
}

// <psi| P |psi> for one Pauli string. P|i> = i^{#Y} (-1)^{|i & sign|} |i ^ flip>.
Complex pauli_expectation(std::span<const Complex> amps, const PauliMasks &m) {
    const auto dim = static_cast<std::int64_t>(amps.size());
    const std::int64_t chunks = dim >= static_cast<std::int64_t>(parallel::kKernelThreshold) ? kChunks : 1;
    const std::int64_t chunk_len = (dim + chunks - 1) / chunks;
    std::vector<Complex> partial(static_cast<std::size_t>(chunks));
    parallel::for_range(chunks, chunks > 1, [&](std::int64_t c) {
        const std::int64_t begin = c * chunk_len;
        const std::int64_t end = std::min(dim, begin + chunk_len);
        Complex acc{0.0, 0.0};
        for (std::int64_t s = begin; s < end; ++s) {
            const auto i = static_cast<std::uint64_t>(s);
            const Complex x = amps[i ^ m.flip];
            const Complex y = amps[i];
            // conj(x) * y without the std::complex NaN recovery path.
            const Complex term{x.real() * y.real() + x.imag() * y.imag(),
                               x.real() * y.imag() - x.imag() * y.real()};
            acc += (std::popcount(i & m.sign) & 1) ? -term : term;
        }
        partial[static_cast<std::size_t>(c)] = acc;
    });
    Complex total{0.0, 0.0};
    for (const auto &p : partial) {
        total += p;
    }
    static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return total * kIPowers[m.y_count % 4];
}

} // namespace

PauliObservable::PauliObservable(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    require<ConfigError>(n_qubits >= 1 && n_qubits <= kMaxQubits, "observable: bad qubit count");
    for (const auto &t : terms_) {
        require<ShapeError>(static_cast<int>(t.paulis.size()) == n_qubits,
                            "observable: Pauli string '" + t.paulis + "' has length " +
                                std::to_string(t.paulis.size()) + ", expected " +
                                std::to_string(n_qubits));
        require<ShapeError>(t.paulis.find_first_not_of("IXYZ") == std::string::npos,
                            "observable: Pauli string '" + t.paulis + "' has letters outside IXYZ");
        require<ConfigError>(std::isfinite(t.coefficient), "observable: non-finite coefficient");
    }
}

PauliObservable PauliObservable::term(const std::string &paulis, double coefficient) {
    return PauliObservable(static_cast<int>(paulis.size()), {{coefficient, paulis}});
}

double PauliObservable::coefficient_bound() const {
    double bound = 0.0;
    for (const auto &t : terms_) {
        bound += std::abs(t.coefficient);
    }
    return bound;
}

double expectation(const Statevector &sv, const PauliObservable &obs) {
    require<ShapeError>(sv.n_qubits() == obs.n_qubits(),
                        "expectation: observable acts on " + std::to_string(obs.n_qubits()) +
                            " qubits, state has " + std::to_string(sv.n_qubits()));
    double value = 0.0;
    for (const auto &t : obs.terms()) {
        const Complex e = pauli_expectation(sv.amplitudes(), masks_of(t.paulis));
        if (std::abs(e.imag()) > kImaginaryTolerance) {
            throw InternalConsistencyError("expectation: imaginary residue " +
                                           std::to_string(e.imag()) + " on term " + t.paulis);
        }
        value += t.coefficient * e.real();
    }
    return value;
}

} // namespace qstack::sim
