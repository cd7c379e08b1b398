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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qstack::parallel {

/// Amplitude count below which the statevector kernels stay serial. Thread
/// startup dominates for small registers.
inline constexpr std::size_t kKernelThreshold = std::size_t{1} << 14;

/// Parses a thread cap as found in QSTACK_THREADS. Returns nullopt for
/// empty, non-numeric or non-positive values.
std::optional<int> parse_thread_cap(std::string_view text);

/// Thread count used by every parallel region in the library. Defaults to
/// the OpenMP maximum, capped by QSTACK_THREADS when that is set.
int thread_count();

/// Overrides the thread count (tests and the CLI use this). Values < 1 reset
/// to the environment-derived default.
void set_thread_count(int threads);

/// True when a new parallel region would actually fan out: more than one
/// thread configured and not already inside an active region.
bool can_fork();

/**
 * Runs body(i) for i in [0, n). Forks an OpenMP team only when `threaded`
 * and can_fork() hold; otherwise a plain loop, which avoids the region
 * entry cost on the many tiny kernels of small circuits.
 */
template <class Body> void for_range(std::int64_t n, bool threaded, Body &&body) {
    if (threaded && can_fork()) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (std::int64_t i = 0; i < n; ++i) {
            body(i);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            body(i);
        }
    }
}

/// Like for_range but with dynamic scheduling, for uneven work items.
template <class Body> void for_tasks(std::int64_t n, Body &&body) {
    if (n > 1 && can_fork()) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::int64_t i = 0; i < n; ++i) {
            body(i);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            body(i);
        }
    }
}

} // namespace qstack::parallel
