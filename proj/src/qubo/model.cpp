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

#include "qstack/qubo/model.hpp"

#include <cmath>
#include <string>

#include "qstack/common/error.hpp"

namespace qstack::qubo {

namespace {

template <class Linear, class Quadratic>
void validate_terms(int n, const Linear &linear, const Quadratic &quadratic, double offset,
                    const char *what) {
    const std::string prefix(what);
    require<ConfigError>(n >= 1, prefix + ": variable count must be positive");
    for (const auto &[i, c] : linear) {
        require<ConfigError>(i >= 0 && i < n, prefix + ": linear index " + std::to_string(i) +
                                                  " out of range");
        require<ConfigError>(std::isfinite(c), prefix + ": non-finite linear coefficient");
    }
    for (const auto &[key, c] : quadratic) {
        const auto [i, j] = key;
        require<ConfigError>(i >= 0 && j < n && i < j,
                             prefix + ": quadratic key (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must satisfy 0 <= i < j < n");
        require<ConfigError>(std::isfinite(c), prefix + ": non-finite quadratic coefficient");
    }
    require<ConfigError>(std::isfinite(offset), prefix + ": non-finite offset");
}

VarPair ordered(int i, int j) { return i < j ? VarPair{i, j} : VarPair{j, i}; }

} // namespace

QuboModel::QuboModel(int n) : n_vars(n) {}

void QuboModel::add_linear(int i, double c) { linear[i] += c; }

void QuboModel::add_quadratic(int i, int j, double c) {
    if (i == j) {
        add_linear(i, c);
        return;
    }
    quadratic[ordered(i, j)] += c;
}

void QuboModel::validate() const { validate_terms(n_vars, linear, quadratic, offset, "qubo"); }

double QuboModel::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto &[i, c] : linear) {
        m = std::max(m, std::abs(c));
    }
    for (const auto &[k, c] : quadratic) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

IsingModel::IsingModel(int n) : n_spins(n) {}

void IsingModel::add_field(int i, double c) { h[i] += c; }

void IsingModel::add_coupling(int i, int j, double c) {
    if (i == j) {
        offset += c;
        return;
    }
    J[ordered(i, j)] += c;
}

void IsingModel::validate() const { validate_terms(n_spins, h, J, offset, "ising"); }

double evaluate(const QuboModel &model, std::span<const int> x) {
    require<AssignmentError>(x.size() == static_cast<std::size_t>(model.n_vars),
                             "qubo assignment has " + std::to_string(x.size()) +
                                 " entries, model has " + std::to_string(model.n_vars));
    for (int v : x) {
        require<AssignmentError>(v == 0 || v == 1, "qubo assignment values must be 0 or 1");
    }
    double e = model.offset;
    for (const auto &[i, c] : model.linear) {
        e += c * x[static_cast<std::size_t>(i)];
    }
    for (const auto &[key, c] : model.quadratic) {
        e += c * x[static_cast<std::size_t>(key.first)] * x[static_cast<std::size_t>(key.second)];
    }
    return e;
}

double evaluate(const IsingModel &model, std::span<const int> s) {
    require<AssignmentError>(s.size() == static_cast<std::size_t>(model.n_spins),
                             "ising assignment has " + std::to_string(s.size()) +
                                 " entries, model has " + std::to_string(model.n_spins));
    for (int v : s) {
        require<AssignmentError>(v == -1 || v == 1, "ising spin values must be -1 or +1");
    }
    double e = model.offset;
    for (const auto &[i, c] : model.h) {
        e += c * s[static_cast<std::size_t>(i)];
    }
    for (const auto &[key, c] : model.J) {
        e += c * s[static_cast<std::size_t>(key.first)] * s[static_cast<std::size_t>(key.second)];
    }
    return e;
}

std::vector<int> assignment_from_index(std::uint64_t index, int n) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = static_cast<int>((index >> (n - 1 - i)) & 1U);
    }
    return x;
}

std::uint64_t index_from_assignment(std::span<const int> x) {
    std::uint64_t index = 0;
    for (int v : x) {
        index = (index << 1) | static_cast<std::uint64_t>(v != 0);
    }
    return index;
}

} // namespace qstack::qubo
