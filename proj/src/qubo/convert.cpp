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

#include "qstack/qubo/convert.hpp"

namespace qstack::qubo {

IsingModel qubo_to_ising(const QuboModel &model) {
    model.validate();
    IsingModel ising(model.n_vars);
    ising.offset = model.offset;
    // a x = a/2 - (a/2) s
    for (const auto &[i, a] : model.linear) {
        ising.add_field(i, -a / 2.0);
        ising.offset += a / 2.0;
    }
    // b x_i x_j = (b/4)(1 - s_i - s_j + s_i s_j)
    for (const auto &[key, b] : model.quadratic) {
        ising.add_coupling(key.first, key.second, b / 4.0);
        ising.add_field(key.first, -b / 4.0);
        ising.add_field(key.second, -b / 4.0);
        ising.offset += b / 4.0;
    }
    return ising;
}

QuboModel ising_to_qubo(const IsingModel &model) {
    model.validate();
    QuboModel qubo(model.n_spins);
    qubo.offset = model.offset;
    // h s = h - 2h x
    for (const auto &[i, h] : model.h) {
        qubo.add_linear(i, -2.0 * h);
        qubo.offset += h;
    }
    // J s_i s_j = J - 2J x_i - 2J x_j + 4J x_i x_j
    for (const auto &[key, j] : model.J) {
        qubo.add_quadratic(key.first, key.second, 4.0 * j);
        qubo.add_linear(key.first, -2.0 * j);
        qubo.add_linear(key.second, -2.0 * j);
        qubo.offset += j;
    }
    return qubo;
}

std::vector<int> spins_from_bits(std::span<const int> x) {
    std::vector<int> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        s[i] = x[i] == 0 ? 1 : -1;
    }
    return s;
}

std::vector<int> bits_from_spins(std::span<const int> s) {
    std::vector<int> x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        x[i] = s[i] == 1 ? 0 : 1;
    }
    return x;
}

} // namespace qstack::qubo
