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

// Serial reference kernels against the OpenMP kernels on the same states.
// The thread count follows QSTACK_THREADS / OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qstack/qrl/policy.hpp"
#include "qstack/sim/reference.hpp"

using namespace qstack::sim;

namespace {

std::vector<Complex> random_amplitudes(int n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return amps;
}

template <void (*Apply)(std::span<Complex>, int, const GateOp &, double)>
void run_layer(benchmark::State &state, GateKind kind) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_amplitudes(n);
    std::vector<GateOp> layer;
    for (int q = 0; q < n; ++q) {
        layer.push_back(kind == GateKind::CZ ? GateOp{kind, {q, (q + 1) % n}, 0.0}
                                             : GateOp{kind, {q, -1}, 0.3});
    }
    for (auto _ : state) {
        for (const auto &g : layer) {
            Apply(amps, n, g, 0.3);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layer.size()) *
                            static_cast<std::int64_t>(amps.size()));
}

void BM_ReferenceRyLayer(benchmark::State &s) { run_layer<reference::apply>(s, GateKind::RY); }
void BM_KernelRyLayer(benchmark::State &s) { run_layer<kernels::apply>(s, GateKind::RY); }
void BM_ReferenceRzLayer(benchmark::State &s) { run_layer<reference::apply>(s, GateKind::RZ); }
void BM_KernelRzLayer(benchmark::State &s) { run_layer<kernels::apply>(s, GateKind::RZ); }
void BM_ReferenceCzRing(benchmark::State &s) { run_layer<reference::apply>(s, GateKind::CZ); }
void BM_KernelCzRing(benchmark::State &s) { run_layer<kernels::apply>(s, GateKind::CZ); }

template <double (*Sum)(std::span<const Complex>, std::span<const double>)>
void run_expectation(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto amps = random_amplitudes(n);
    std::vector<double> weights(amps.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = static_cast<double>(i % 7) - 3.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(Sum(amps, weights));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void BM_ReferenceDiagonalExpectation(benchmark::State &s) {
    run_expectation<reference::weighted_probability_sum>(s);
}
void BM_KernelDiagonalExpectation(benchmark::State &s) {
    run_expectation<kernels::weighted_probability_sum>(s);
}

// End to end: one batch gradient of the 4-qubit Q-network, the workload the
// bench-grad command times.
void BM_BatchGradient(benchmark::State &state) {
    using namespace qstack::qrl;
    const int n = static_cast<int>(state.range(0));
    VqcPolicy policy(n, 2, VqcPolicy::pair_readouts(n, 2));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-1.0, 1.0);
    std::vector<double> theta(static_cast<std::size_t>(policy.n_params()));
    for (auto &t : theta) {
        t = angle(rng);
    }
    policy.set_theta(theta);
    std::vector<Transition> batch(10);
    for (auto &t : batch) {
        t.state.resize(static_cast<std::size_t>(n));
        for (auto &s : t.state) {
            s = angle(rng);
        }
        t.action = static_cast<int>(rng() % 2);
    }
    const std::vector<double> targets(batch.size(), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(loss_and_gradient(policy, batch, targets));
    }
}

} // namespace

BENCHMARK(BM_ReferenceRyLayer)->DenseRange(10, 20, 5);
BENCHMARK(BM_KernelRyLayer)->DenseRange(10, 20, 5);
BENCHMARK(BM_ReferenceRzLayer)->DenseRange(10, 20, 5);
BENCHMARK(BM_KernelRzLayer)->DenseRange(10, 20, 5);
BENCHMARK(BM_ReferenceCzRing)->DenseRange(10, 20, 5);
BENCHMARK(BM_KernelCzRing)->DenseRange(10, 20, 5);
BENCHMARK(BM_ReferenceDiagonalExpectation)->DenseRange(10, 20, 5);
BENCHMARK(BM_KernelDiagonalExpectation)->DenseRange(10, 20, 5);
BENCHMARK(BM_BatchGradient)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
