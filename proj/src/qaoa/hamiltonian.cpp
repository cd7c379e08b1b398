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

#include "qstack/qaoa/hamiltonian.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"
#include "qstack/sim/statevector.hpp"

namespace qstack::qaoa {

std::vector<double> CostHamiltonian::diagonal() const {
    require<ConfigError>(n_qubits >= 1 && n_qubits <= sim::kMaxQubits, "cost: bad qubit count");
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<std::pair<std::uint64_t, double>> singles;
    for (const auto &[q, w] : single_z) {
        singles.emplace_back(sim::qubit_mask(n_qubits, q), w);
    }
    std::vector<std::pair<std::uint64_t, double>> doubles;
    for (const auto &[key, w] : double_z) {
        doubles.emplace_back(sim::qubit_mask(n_qubits, key.first) | sim::qubit_mask(n_qubits, key.second), w);
    }
    std::vector<double> diag(dim);
    const auto n = static_cast<std::int64_t>(dim);
    parallel::for_range(n, dim >= parallel::kKernelThreshold, [&](std::int64_t s) {
        const auto z = static_cast<std::uint64_t>(s);
        double e = offset;
        for (const auto &[mask, w] : singles) {
            e += (z & mask) ? -w : w;
        }
        for (const auto &[mask, w] : doubles) {
            // Z_i Z_j is -1 exactly when one of the two bits is set.
            e += (std::popcount(z & mask) == 1) ? -w : w;
        }
        diag[static_cast<std::size_t>(s)] = e;
    });
    return diag;
}

sim::PauliObservable CostHamiltonian::as_observable() const {
    std::vector<sim::PauliTerm> terms;
    const std::string identity(static_cast<std::size_t>(n_qubits), 'I');
    terms.push_back({offset, identity});
    for (const auto &[q, w] : single_z) {
        std::string p = identity;
        p[static_cast<std::size_t>(q)] = 'Z';
        terms.push_back({w, p});
    }
    for (const auto &[key, w] : double_z) {
        std::string p = identity;
        p[static_cast<std::size_t>(key.first)] = 'Z';
        p[static_cast<std::size_t>(key.second)] = 'Z';
        terms.push_back({w, p});
    }
    return sim::PauliObservable(n_qubits, std::move(terms));
}

MixerHamiltonian MixerHamiltonian::uniform(int n_qubits) {
    MixerHamiltonian m;
    m.qubits.resize(static_cast<std::size_t>(n_qubits));
    std::iota(m.qubits.begin(), m.qubits.end(), 0);
    return m;
}

CostHamiltonian cost_hamiltonian_from_ising(const qubo::IsingModel &ising) {
    ising.validate();
    CostHamiltonian cost;
    cost.n_qubits = ising.n_spins;
    cost.single_z = ising.h;
    cost.double_z = ising.J;
    cost.offset = ising.offset;
    return cost;
}

} // namespace qstack::qaoa
