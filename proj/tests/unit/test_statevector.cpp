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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qstack/common/error.hpp"
#include "qstack/common/parallel.hpp"
#include "qstack/sim/executor.hpp"
#include "qstack/sim/kernels.hpp"
#include "qstack/sim/reference.hpp"

using namespace qstack;
using namespace qstack::sim;

namespace {

void check_close(std::span<const Complex> got, const std::vector<Complex> &want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(std::abs(got[i] - want[i]) <= tol);
    }
}

Statevector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &v : a) {
        v = {g(rng), g(rng)};
        norm += std::norm(v);
    }
    for (auto &v : a) {
        v /= std::sqrt(norm);
    }
    return Statevector::from_amplitudes(n, std::move(a));
}

} // namespace

TEST_CASE("zero state has unit amplitude at index 0") {
    const auto one = init_zero_state(1);
    CHECK(one.dim() == 2);
    CHECK(one[0] == Complex{1, 0});
    CHECK(one[1] == Complex{0, 0});
    const auto two = Statevector::zero(2);
    CHECK(two.dim() == 4);
    CHECK(two[0] == Complex{1, 0});
    CHECK(two.norm() == doctest::Approx(1.0));
}

TEST_CASE("register size outside 1..24 is a configuration error") {
    CHECK_THROWS_AS(Statevector::zero(25), ConfigError);
    CHECK_THROWS_AS(Statevector::zero(0), ConfigError);
    CHECK_NOTHROW(Statevector::zero(kMaxQubits));
}

TEST_CASE("from_amplitudes checks the length") {
    CHECK_THROWS_AS(Statevector::from_amplitudes(2, std::vector<Complex>(3)), ShapeError);
    CHECK_NOTHROW(Statevector::from_amplitudes(2, std::vector<Complex>(4)));
}

TEST_CASE("bitstrings are big-endian with qubit 0 leftmost") {
    CHECK(to_bitstring(1, 3) == "001");
    CHECK(to_bitstring(4, 3) == "100");
    CHECK(from_bitstring("110") == 6);
    CHECK(qubit_mask(4, 0) == 8);
    CHECK_THROWS_AS(from_bitstring("10x"), ShapeError);
    for (std::uint64_t i = 0; i < 32; ++i) {
        CHECK(from_bitstring(to_bitstring(i, 5)) == i);
    }
}

TEST_CASE("single gate examples") {
    const std::vector<double> none;
    SUBCASE("H on |0>") {
        const auto sv = apply_gate(Statevector::zero(1), GateOp::h(0), none);
        const double r = std::sqrt(0.5);
        check_close(sv.amplitudes(), {{r, 0}, {r, 0}}, 1e-15);
    }
    SUBCASE("RX(pi) on |0> is -i|1>") {
        const auto sv = apply_gate(Statevector::zero(1), GateOp::rx(0, std::numbers::pi), none);
        check_close(sv.amplitudes(), {{0, 0}, {0, -1}}, 1e-15);
    }
    SUBCASE("CZ on |11> flips the sign") {
        auto sv = Statevector::zero(2);
        sv = apply_gate(sv, GateOp::x(0), none);
        sv = apply_gate(sv, GateOp::x(1), none);
        sv = apply_gate(sv, GateOp::cz(0, 1), none);
        check_close(sv.amplitudes(), {{0, 0}, {0, 0}, {0, 0}, {-1, 0}}, 1e-15);
    }
    SUBCASE("X on qubit 0 of two sets the leftmost bit") {
        const auto sv = apply_gate(Statevector::zero(2), GateOp::x(0), none);
        CHECK(sv[from_bitstring("10")] == Complex{1, 0});
    }
    SUBCASE("unresolved parameter") {
        const std::vector<double> one{0.1};
        CHECK_THROWS_AS(apply_gate(Statevector::zero(1), GateOp::rx(0, ParamRef{3}), one),
                        ParameterBindingError);
    }
}

TEST_CASE("run examples") {
    SUBCASE("empty circuit") {
        ParameterizedCircuit c(2, 0);
        const auto sv = run(c, {});
        check_close(sv.amplitudes(), {{1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0.0);
    }
    SUBCASE("H CZ H interferometer matches the dense product") {
        ParameterizedCircuit c(2, 0);
        c.h(0).cz(0, 1).h(0);
        check_close(run(c, {}).amplitudes(), oracle::run(c, {}), 1e-12);
    }
    SUBCASE("RX(0.7) closed form") {
        ParameterizedCircuit c(1, 0);
        c.rx(0, 0.7);
        check_close(run(c, {}).amplitudes(), {{std::cos(0.35), 0}, {0, -std::sin(0.35)}}, 1e-15);
    }
    SUBCASE("parameter count mismatch") {
        ParameterizedCircuit c(1, 1);
        c.rx(0, ParamRef{0});
        const std::vector<double> two{0.1, 0.2};
        CHECK_THROWS_AS(run(c, two), ParameterBindingError);
        CHECK_THROWS_AS(run(c, {}), ParameterBindingError);
    }
}

TEST_CASE("random circuits match the dense unitary oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int n_params = static_cast<int>(rng() % 3);
        const auto c = oracle::random_circuit(n, 1 + static_cast<int>(rng() % 14), n_params, rng);
        std::vector<double> params(static_cast<std::size_t>(n_params));
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (auto &p : params) {
            p = u(rng);
        }
        check_close(run(c, params).amplitudes(), oracle::run(c, params), 1e-9);
    }
}

TEST_CASE("gates preserve the norm") {
    std::mt19937_64 rng(5);
    const std::vector<double> none;
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto sv = random_state(n, rng);
        const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int b = (q + 1) % n;
        for (const auto &g : {GateOp::h(q), GateOp::x(q), GateOp::rx(q, 0.3 * t), GateOp::ry(q, -1.1 + t),
                              GateOp::rz(q, 2.0 - t), GateOp::cz(q, b)}) {
            sv = apply_gate(sv, g, none);
            CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("threaded kernels agree with the serial reference above the threshold") {
    const int n = 15;
    static_assert((std::size_t{1} << 15) >= parallel::kKernelThreshold);
    std::mt19937_64 rng(3);
    const auto start = random_state(n, rng);
    const std::vector<GateOp> gates{GateOp::h(0),        GateOp::x(14),        GateOp::rx(3, 0.4),
                                    GateOp::ry(7, -1.2), GateOp::rz(14, 2.2), GateOp::cz(2, 11),
                                    GateOp::cz(13, 0)};
    for (int threads : {1, 3}) {
        parallel::set_thread_count(threads);
        std::vector<Complex> fast(start.amplitudes().begin(), start.amplitudes().end());
        std::vector<Complex> slow = fast;
        for (const auto &g : gates) {
            const double angle = std::holds_alternative<double>(g.angle) ? std::get<double>(g.angle) : 0.0;
            kernels::apply(fast, n, g, angle);
            reference::apply(slow, n, g, angle);
        }
        for (std::size_t i = 0; i < fast.size(); ++i) {
            REQUIRE(std::abs(fast[i] - slow[i]) < 1e-13);
        }
        std::vector<double> w(fast.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = static_cast<double>(i % 7) - 3.0;
        }
        CHECK(kernels::weighted_probability_sum(fast, w) ==
              doctest::Approx(reference::weighted_probability_sum(slow, w)).epsilon(1e-12));
    }
    parallel::set_thread_count(0);
}

TEST_CASE("results do not depend on the thread count") {
    const int n = 15;
    std::mt19937_64 rng(8);
    const auto c = oracle::random_circuit(n, 40, 0, rng);
    parallel::set_thread_count(1);
    const auto a = run(c, {});
    parallel::set_thread_count(4);
    const auto b = run(c, {});
    parallel::set_thread_count(0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        REQUIRE(a[i] == b[i]);
    }
}

TEST_CASE("thread cap parsing") {
    CHECK(parallel::parse_thread_cap("4") == 4);
    CHECK_FALSE(parallel::parse_thread_cap("0").has_value());
    CHECK_FALSE(parallel::parse_thread_cap("-2").has_value());
    CHECK_FALSE(parallel::parse_thread_cap("3x").has_value());
    CHECK_FALSE(parallel::parse_thread_cap("").has_value());
}
