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

#include "qstack/mqo/problem.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qstack/common/error.hpp"

namespace qstack::mqo {

std::vector<int> MqoProblem::query_of_plan() const {
    std::vector<int> owner(costs.size(), -1);
    for (std::size_t q = 0; q < queries.size(); ++q) {
        for (int plan : queries[q]) {
            owner[static_cast<std::size_t>(plan)] = static_cast<int>(q);
        }
    }
    return owner;
}

void MqoProblem::validate() const {
    require<InstanceError>(!costs.empty(), "mqo: instance has no plans");
    require<InstanceError>(!queries.empty(), "mqo: instance has no queries");
    const auto n = costs.size();
    std::vector<int> owner(n, -1);
    for (std::size_t q = 0; q < queries.size(); ++q) {
        require<InstanceError>(!queries[q].empty(), "mqo: query " + std::to_string(q) + " has no plans");
        for (int plan : queries[q]) {
            require<InstanceError>(plan >= 0 && static_cast<std::size_t>(plan) < n,
                                   "mqo: query " + std::to_string(q) + " names unknown plan " +
                                       std::to_string(plan));
            require<InstanceError>(owner[static_cast<std::size_t>(plan)] == -1,
                                   "mqo: plan " + std::to_string(plan) + " belongs to two queries");
            owner[static_cast<std::size_t>(plan)] = static_cast<int>(q);
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        require<InstanceError>(owner[p] != -1, "mqo: plan " + std::to_string(p) + " belongs to no query");
        require<InstanceError>(std::isfinite(costs[p]) && costs[p] >= 0.0,
                               "mqo: cost of plan " + std::to_string(p) + " must be finite and >= 0");
    }
    for (const auto &s : savings) {
        const std::string pair = "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
        require<InstanceError>(s.i >= 0 && s.i < s.j && static_cast<std::size_t>(s.j) < n,
                               "mqo: saving " + pair + " needs 0 <= i < j < plan count");
        require<InstanceError>(owner[static_cast<std::size_t>(s.i)] != owner[static_cast<std::size_t>(s.j)],
                               "mqo: saving " + pair + " links plans of the same query");
        require<InstanceError>(std::isfinite(s.amount) && s.amount >= 0.0,
                               "mqo: saving " + pair + " must be finite and >= 0");
    }
}

PenaltyWeights default_weights(const MqoProblem &problem, double epsilon) {
    require<ConfigError>(std::isfinite(epsilon) && epsilon > 0.0, "mqo: epsilon must be positive");
    problem.validate();
    const double max_cost = *std::max_element(problem.costs.begin(), problem.costs.end());
    PenaltyWeights w;
    w.epsilon = epsilon;
    w.wl = max_cost > 0.0 ? (1.0 + epsilon) * max_cost : epsilon;
    double total_savings = 0.0;
    for (const auto &s : problem.savings) {
        total_savings += s.amount;
    }
    w.wm = w.wl + total_savings;
    return w;
}

qubo::QuboModel build_qubo(const MqoProblem &problem, const PenaltyWeights &weights) {
    problem.validate();
    const double max_cost = *std::max_element(problem.costs.begin(), problem.costs.end());
    double total_savings = 0.0;
    for (const auto &s : problem.savings) {
        total_savings += s.amount;
    }
    require<ConfigError>(weights.wl > max_cost, "mqo: wl must exceed every plan cost");
    require<ConfigError>(weights.wm >= weights.wl + total_savings,
                         "mqo: wm must be at least wl plus the total savings");

    qubo::QuboModel model(problem.plan_count());
    for (int i = 0; i < problem.plan_count(); ++i) {
        model.add_linear(i, -(weights.wl - problem.costs[static_cast<std::size_t>(i)]));
    }
    for (const auto &plans : problem.queries) {
        for (std::size_t a = 0; a < plans.size(); ++a) {
            for (std::size_t b = a + 1; b < plans.size(); ++b) {
                model.add_quadratic(plans[a], plans[b], weights.wm);
            }
        }
    }
    for (const auto &s : problem.savings) {
        model.add_quadratic(s.i, s.j, -s.amount);
    }
    return model;
}

Decoded decode(std::span<const int> assignment, const MqoProblem &problem) {
    require<ShapeError>(assignment.size() == problem.costs.size(),
                        "mqo: assignment has " + std::to_string(assignment.size()) +
                            " entries, instance has " + std::to_string(problem.costs.size()) +
                            " plans");
    Decoded out;
    out.selection.resize(problem.queries.size());
    for (std::size_t q = 0; q < problem.queries.size(); ++q) {
        int chosen = -1;
        int count = 0;
        for (int plan : problem.queries[q]) {
            if (assignment[static_cast<std::size_t>(plan)] != 0) {
                ++count;
                chosen = plan;
            }
        }
        if (count == 1) {
            out.selection[q] = chosen;
        } else {
            out.violations.push_back({static_cast<int>(q), count});
        }
    }
    out.feasible = out.violations.empty();
    return out;
}

double selection_cost(std::span<const int> assignment, const MqoProblem &problem) {
    require<ShapeError>(assignment.size() == problem.costs.size(), "mqo: assignment length mismatch");
    double total = 0.0;
    for (std::size_t p = 0; p < assignment.size(); ++p) {
        if (assignment[p]) {
            total += problem.costs[p];
        }
    }
    for (const auto &s : problem.savings) {
        if (assignment[static_cast<std::size_t>(s.i)] && assignment[static_cast<std::size_t>(s.j)]) {
            total -= s.amount;
        }
    }
    return total;
}

MqoProblem generate_random_instance(int n_queries, int plans_per_query, double savings_density,
                                    std::uint64_t seed) {
    require<ConfigError>(n_queries >= 1, "mqo: n_queries must be >= 1");
    require<ConfigError>(plans_per_query >= 1, "mqo: plans_per_query must be >= 1");
    require<ConfigError>(savings_density >= 0.0 && savings_density <= 1.0,
                         "mqo: savings density must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cost_dist(1.0, 10.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    MqoProblem problem;
    for (int q = 0; q < n_queries; ++q) {
        std::vector<int> plans(static_cast<std::size_t>(plans_per_query));
        for (int k = 0; k < plans_per_query; ++k) {
            plans[static_cast<std::size_t>(k)] = q * plans_per_query + k;
        }
        problem.queries.push_back(std::move(plans));
    }
    const int total = n_queries * plans_per_query;
    problem.costs.resize(static_cast<std::size_t>(total));
    for (auto &c : problem.costs) {
        c = cost_dist(rng);
    }
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            if (i / plans_per_query == j / plans_per_query) {
                continue;
            }
            if (unit(rng) < savings_density) {
                const double cap = std::min(problem.costs[static_cast<std::size_t>(i)],
                                            problem.costs[static_cast<std::size_t>(j)]);
                problem.savings.push_back({i, j, unit(rng) * cap});
            }
        }
    }
    return problem;
}

} // namespace qstack::mqo
