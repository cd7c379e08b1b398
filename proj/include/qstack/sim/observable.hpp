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

#include <string>
#include <vector>

#include "qstack/sim/statevector.hpp"

namespace qstack::sim {

/// coefficient * P_0 (x) P_1 (x) ..., with character k acting on qubit k.
struct PauliTerm {
    double coefficient = 1.0;
    std::string paulis;
};

/// Real linear combination of Pauli strings of one common length.
class PauliObservable {
  public:
    /// Throws ShapeError on mismatched lengths or letters outside IXYZ and
    /// ConfigError on non-finite coefficients.
    PauliObservable(int n_qubits, std::vector<PauliTerm> terms);

    /// Single unit-coefficient term, e.g. PauliObservable::term("ZZII").
    static PauliObservable term(const std::string &paulis, double coefficient = 1.0);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept { return terms_; }

    /// Sum of |coefficient|, an upper bound on |<P>|.
    [[nodiscard]] double coefficient_bound() const;

  private:
    int n_qubits_;
    std::vector<PauliTerm> terms_;
};

/// <sv| obs |sv>. Throws ShapeError when register sizes differ and
/// InternalConsistencyError if a term's imaginary residue exceeds 1e-8.
double expectation(const Statevector &sv, const PauliObservable &obs);

} // namespace qstack::sim
