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

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qstack::qubo {

using VarPair = std::pair<int, int>;

/// E(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic_ij x_i x_j, x in {0,1}^n.
struct QuboModel {
    int n_vars = 0;
    std::map<int, double> linear;
    std::map<VarPair, double> quadratic;
    double offset = 0.0;

    QuboModel() = default;
    explicit QuboModel(int n);

    /// Accumulates into an existing coefficient.
    void add_linear(int i, double c);

    /// Accumulates c x_i x_j. The pair is normalised to i < j; i == j folds
    /// into the linear term since x^2 = x.
    void add_quadratic(int i, int j, double c);

    /// Throws ConfigError on bad indices, unordered keys or non-finite values.
    void validate() const;

    [[nodiscard]] double max_abs_coefficient() const;
};

/// E(s) = offset + sum_i h_i s_i + sum_{i<j} J_ij s_i s_j, s in {-1,+1}^n.
struct IsingModel {
    int n_spins = 0;
    std::map<int, double> h;
    std::map<VarPair, double> J;
    double offset = 0.0;

    IsingModel() = default;
    explicit IsingModel(int n);

    void add_field(int i, double c);

    /// i == j folds into the offset since s^2 = 1.
    void add_coupling(int i, int j, double c);

    void validate() const;
};

/// Throws AssignmentError unless x has n_vars entries in {0, 1}.
double evaluate(const QuboModel &model, std::span<const int> x);

/// Throws AssignmentError unless s has n_spins entries in {-1, +1}.
double evaluate(const IsingModel &model, std::span<const int> s);

/// Bits of basis index `index`, variable 0 first (most significant).
std::vector<int> assignment_from_index(std::uint64_t index, int n);

/// Inverse of assignment_from_index.
std::uint64_t index_from_assignment(std::span<const int> x);

} // namespace qstack::qubo
