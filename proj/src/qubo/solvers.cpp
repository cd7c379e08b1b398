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

#include "qstack/qubo/solvers.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"

namespace qstack::qubo {

namespace {

constexpr double kTieTolerance = 1e-12;
// Enumeration blocks restart from an exact energy so incremental drift stays
// far below the tie tolerance.
constexpr std::uint64_t kBlockBits = 12;

bool strictly_better(double candidate, double incumbent) {
    return candidate < incumbent - kTieTolerance * std::max(1.0, std::abs(incumbent));
}

struct Candidate {
    std::uint64_t index = 0;
    double energy = std::numeric_limits<double>::infinity();
};

// Lower energy wins; within tolerance the smaller index wins.
Candidate merge(const Candidate &a, const Candidate &b) {
    if (strictly_better(b.energy, a.energy)) {
        return b;
    }
    if (strictly_better(a.energy, b.energy)) {
        return a;
    }
    return a.index <= b.index ? a : b;
}

} // namespace

DenseQubo::DenseQubo(const QuboModel &model)
    : n_(model.n_vars), offset_(model.offset), linear_(static_cast<std::size_t>(model.n_vars), 0.0),
      coupling_(static_cast<std::size_t>(model.n_vars) * static_cast<std::size_t>(model.n_vars), 0.0) {
    model.validate();
    for (const auto &[i, c] : model.linear) {
        linear_[static_cast<std::size_t>(i)] = c;
    }
    const auto n = static_cast<std::size_t>(n_);
    for (const auto &[key, c] : model.quadratic) {
        const auto i = static_cast<std::size_t>(key.first);
        const auto j = static_cast<std::size_t>(key.second);
        coupling_[i * n + j] = c;
        coupling_[j * n + i] = c;
    }
}

double DenseQubo::flip_delta(std::span<const int> x, int i) const {
    const auto n = static_cast<std::size_t>(n_);
    const auto row = static_cast<std::size_t>(i) * n;
    double field = linear_[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < n; ++j) {
        field += coupling_[row + j] * x[j];
    }
    return (1 - 2 * x[static_cast<std::size_t>(i)]) * field;
}

double DenseQubo::energy(std::span<const int> x) const {
    const auto n = static_cast<std::size_t>(n_);
    double e = offset_;
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) {
            continue;
        }
        e += linear_[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            e += coupling_[i * n + j] * x[j];
        }
    }
    return e;
}

Solution brute_force_minimize(const QuboModel &model) {
    require<SizeError>(model.n_vars <= kMaxBruteForceVars,
                       "brute force is limited to 24 variables, model has " +
                           std::to_string(model.n_vars));
    const DenseQubo dense(model);
    const int n = model.n_vars;
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t block = std::min<std::uint64_t>(total, std::uint64_t{1} << kBlockBits);
    const auto blocks = static_cast<std::int64_t>(total / block);

    std::vector<Candidate> best(static_cast<std::size_t>(blocks));
    parallel::for_range(blocks, blocks > 1, [&](std::int64_t b) {
        const std::uint64_t first = static_cast<std::uint64_t>(b) * block;
        std::vector<int> x = assignment_from_index(first, n);
        double e = dense.energy(x);
        Candidate local{first, e};
        for (std::uint64_t k = first + 1; k < first + block; ++k) {
            // k-1 -> k flips the trailing ones to zero and the next zero to one.
            const std::uint64_t changed = (k ^ (k - 1));
            for (int bit = 0; (changed >> bit) != 0; ++bit) {
                const int var = n - 1 - bit;
                e += dense.flip_delta(x, var);
                x[static_cast<std::size_t>(var)] ^= 1;
            }
            local = merge(local, Candidate{k, e});
        }
        best[static_cast<std::size_t>(b)] = local;
    });

    Candidate winner = best.front();
    for (std::size_t b = 1; b < best.size(); ++b) {
        winner = merge(winner, best[b]);
    }
    Solution sol;
    sol.assignment = assignment_from_index(winner.index, n);
    sol.energy = evaluate(model, sol.assignment);
    return sol;
}

double default_start_temperature(const QuboModel &model) {
    const double m = model.max_abs_coefficient();
    return m > 0.0 ? 10.0 * m : 1.0;
}

Solution simulated_annealing(const QuboModel &model, const AnnealConfig &config,
                             std::uint64_t seed) {
    const double t_start = config.t_start.value_or(default_start_temperature(model));
    require<ConfigError>(model.n_vars >= 1, "anneal: model has no variables");
    require<ConfigError>(std::isfinite(t_start) && t_start > config.t_end && config.t_end > 0.0,
                         "anneal: schedule needs t_start > t_end > 0");
    require<ConfigError>(config.sweeps >= 1, "anneal: sweeps must be >= 1");
    require<ConfigError>(config.restarts >= 1, "anneal: restarts must be >= 1");

    const DenseQubo dense(model);
    const int n = model.n_vars;
    const double ratio = config.sweeps > 1
                             ? std::pow(config.t_end / t_start, 1.0 / (config.sweeps - 1))
                             : 1.0;

    std::vector<Solution> best(static_cast<std::size_t>(config.restarts));
    parallel::for_tasks(config.restarts, [&](std::int64_t r) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        std::bernoulli_distribution coin(0.5);

        std::vector<int> x(static_cast<std::size_t>(n));
        for (auto &v : x) {
            v = coin(rng) ? 1 : 0;
        }
        double e = dense.energy(x);
        std::vector<int> best_x = x;
        double best_e = e;

        double temperature = t_start;
        for (int sweep = 0; sweep < config.sweeps; ++sweep) {
            for (int i = 0; i < n; ++i) {
                const double delta = dense.flip_delta(x, i);
                if (delta <= 0.0 || uniform(rng) < std::exp(-delta / temperature)) {
                    x[static_cast<std::size_t>(i)] ^= 1;
                    e += delta;
                    if (e < best_e) {
                        best_e = e;
                        best_x = x;
                    }
                }
            }
            temperature *= ratio;
        }
        best[static_cast<std::size_t>(r)] = Solution{std::move(best_x), 0.0};
    });

    // Lexicographic order on equal-length bit vectors is big-endian integer
    // order, and works past 64 variables.
    Solution winner;
    for (auto &candidate : best) {
        candidate.energy = evaluate(model, candidate.assignment);
        if (winner.assignment.empty() || strictly_better(candidate.energy, winner.energy) ||
            (!strictly_better(winner.energy, candidate.energy) &&
             candidate.assignment < winner.assignment)) {
            winner = std::move(candidate);
        }
    }
    return winner;
}

} // namespace qstack::qubo
