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

#include <map>
#include <vector>

#include "qstack/qubo/model.hpp"
#include "qstack/sim/observable.hpp"

namespace qstack::qaoa {

/// C = offset + sum_i w_i Z_i + sum_{i<j} w_ij Z_i Z_j. Diagonal in the
/// computational basis, with bit 0 read as spin +1.
struct CostHamiltonian {
    int n_qubits = 0;
    std::map<int, double> single_z;
    std::map<qubo::VarPair, double> double_z;
    double offset = 0.0;

    /// <z|C|z> for every basis index z (offset included).
    [[nodiscard]] std::vector<double> diagonal() const;

    /// Same operator as a Pauli sum; the offset becomes an all-I term.
    [[nodiscard]] sim::PauliObservable as_observable() const;
};

/// Transverse field B = sum_q X_q over the whole register.
struct MixerHamiltonian {
    std::vector<int> qubits;

    static MixerHamiltonian uniform(int n_qubits);
};

CostHamiltonian cost_hamiltonian_from_ising(const qubo::IsingModel &ising);

} // namespace qstack::qaoa
