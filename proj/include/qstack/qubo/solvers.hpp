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
#include <optional>
#include <span>
#include <vector>

#include "qstack/qubo/model.hpp"

namespace qstack::qubo {

inline constexpr int kMaxBruteForceVars = 24;

struct Solution {
    std::vector<int> assignment;
    double energy = 0.0;
};

/// Dense copy of a QUBO for inner loops: linear vector plus a symmetric
/// coupling matrix with zero diagonal.
class DenseQubo {
  public:
    explicit DenseQubo(const QuboModel &model);

    [[nodiscard]] int n() const noexcept { return n_; }

    /// E(x with bit i flipped) - E(x).
    [[nodiscard]] double flip_delta(std::span<const int> x, int i) const;

    [[nodiscard]] double energy(std::span<const int> x) const;

  private:
    int n_;
    double offset_;
    std::vector<double> linear_;
    std::vector<double> coupling_;
};

/// Exhaustive minimum. Ties (within 1e-12 relative) go to the smallest
/// big-endian assignment integer. Throws SizeError above 24 variables.
Solution brute_force_minimize(const QuboModel &model);

/// Single-flip Metropolis with a geometric schedule from t_start to t_end.
struct AnnealConfig {
    /// Defaults to 10 * max |coefficient| (1.0 for an all-zero model).
    std::optional<double> t_start;
    double t_end = 1e-2;
    int sweeps = 1000;
    /// Independent chains, seeded from (seed, restart index); best one wins.
    int restarts = 1;
};

/// Resolved starting temperature for `model`.
double default_start_temperature(const QuboModel &model);

/// Returns the best assignment seen over all restarts with its energy
/// re-evaluated from the model. Ties across restarts go to the smaller
/// assignment integer. Throws ConfigError on an invalid schedule.
Solution simulated_annealing(const QuboModel &model, const AnnealConfig &config,
                             std::uint64_t seed);

} // namespace qstack::qubo
