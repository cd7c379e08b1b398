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

#include "qstack/sim/gradient.hpp"

#include <cstdint>
#include <exception>
#include <numbers>

#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"
#include "qstack/sim/executor.hpp"

namespace qstack::sim {

std::vector<double> param_shift_gradient(const ParameterizedCircuit &circuit,
                                         std::span<const double> params,
                                         const Objective &objective) {
    require<ParameterBindingError>(params.size() == static_cast<std::size_t>(circuit.n_params()),
                                   "gradient: circuit has " + std::to_string(circuit.n_params()) +
                                       " parameters, got " + std::to_string(params.size()));
    circuit.validate();

    std::vector<std::size_t> sites;
    for (std::size_t k = 0; k < circuit.ops().size(); ++k) {
        const auto &op = circuit.ops()[k];
        if (op.is_parameterized()) {
            require<UnsupportedGradientError>(is_rotation(op.kind),
                                              "gradient: parameter feeds a non-rotation gate");
            sites.push_back(k);
        }
    }

    constexpr double kShift = std::numbers::pi / 2.0;
    const auto jobs = static_cast<std::int64_t>(2 * sites.size());
    std::vector<double> values(static_cast<std::size_t>(jobs), 0.0);
    std::exception_ptr failure;
    parallel::for_tasks(jobs, [&](std::int64_t j) {
        try {
            const std::size_t site = sites[static_cast<std::size_t>(j / 2)];
            const double delta = (j % 2 == 0) ? kShift : -kShift;
            values[static_cast<std::size_t>(j)] = objective(run(circuit, params, AngleShift{site, delta}));
        } catch (...) {
#pragma omp critical(qstack_gradient_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    });
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<double> grad(params.size(), 0.0);
    for (std::size_t s = 0; s < sites.size(); ++s) {
        const auto &ref = std::get<ParamRef>(circuit.ops()[sites[s]].angle);
        grad[static_cast<std::size_t>(ref.index)] += ref.scale * (values[2 * s] - values[2 * s + 1]) / 2.0;
    }
    return grad;
}

std::vector<double> param_shift_gradient(const ParameterizedCircuit &circuit,
                                         std::span<const double> params,
                                         const PauliObservable &obs) {
    require<ShapeError>(obs.n_qubits() == circuit.n_qubits(),
                        "gradient: observable and circuit sizes differ");
    return param_shift_gradient(circuit, params,
                                [&obs](const Statevector &sv) { return expectation(sv, obs); });
}

std::size_t shift_evaluation_count(const ParameterizedCircuit &circuit) {
    return 2 * circuit.parameter_occurrences();
}

} // namespace qstack::sim
