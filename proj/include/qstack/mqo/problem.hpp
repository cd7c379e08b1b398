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

namespace qstack::mqo {

/// Work shared between plan i of one query and plan j of another (i < j).
struct Saving {
    int i = 0;
    int j = 0;
    double amount = 0.0;

    friend bool operator==(const Saving &, const Saving &) = default;
};

/**
 * Multi-query optimisation instance: pick one plan per query minimising the
 * summed plan costs minus the savings between co-selected plans.
 *
 * Plan groups partition 0..P-1. Savings only link plans of different
 * queries.
 */
struct MqoProblem {
    std::vector<std::vector<int>> queries;
    std::vector<double> costs;
    std::vector<Saving> savings;

    [[nodiscard]] int plan_count() const { return static_cast<int>(costs.size()); }
    [[nodiscard]] int query_count() const { return static_cast<int>(queries.size()); }

    /// Query index owning each plan. Assumes a valid instance.
    [[nodiscard]] std::vector<int> query_of_plan() const;

    /// Throws InstanceError on any violated invariant.
    void validate() const;

    friend bool operator==(const MqoProblem &, const MqoProblem &) = default;
};

struct PenaltyWeights {
    double epsilon = 0.25;
    /// Reward per selected plan before its cost is subtracted.
    double wl = 0.0;
    /// Penalty for co-selecting two plans of one query.
    double wm = 0.0;
};

inline constexpr double kDefaultEpsilon = 0.25;

/// wl = (1 + epsilon) * max cost (epsilon when every cost is 0);
/// wm = wl + total savings.
PenaltyWeights default_weights(const MqoProblem &problem, double epsilon = kDefaultEpsilon);

/// Energy E_l + E_m + E_s with one binary variable per plan:
///   E_l = -sum_i (wl - c_i) v_i
///   E_m = wm * sum over same-query plan pairs v_i v_j
///   E_s = -sum over savings s * v_i v_j
/// Throws ConfigError if the weights cannot force one plan per query.
qubo::QuboModel build_qubo(const MqoProblem &problem, const PenaltyWeights &weights);

struct QueryViolation {
    int query = 0;
    int selected = 0;  // 0 or >= 2
};

struct Decoded {
    bool feasible = false;
    /// Chosen plan per query, empty where the query is violated.
    std::vector<std::optional<int>> selection;
    std::vector<QueryViolation> violations;
};

/// Reads a plan selection out of a QUBO assignment. Throws ShapeError when
/// the length differs from the plan count.
Decoded decode(std::span<const int> assignment, const MqoProblem &problem);

/// Sum of selected plan costs minus savings among selected pairs.
double selection_cost(std::span<const int> assignment, const MqoProblem &problem);

/// Random instance: plans of query q are q*ppq .. q*ppq+ppq-1, costs uniform
/// in [1, 10], each cross-query pair carries a saving with probability
/// `density`, uniform in [0, min(c_i, c_j)]. Deterministic per seed.
MqoProblem generate_random_instance(int n_queries, int plans_per_query, double savings_density,
                                    std::uint64_t seed);

} // namespace qstack::mqo
