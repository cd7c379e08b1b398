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

#include "qstack/common/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>

namespace qstack::parallel {

namespace {

std::atomic<int> g_override{0};

int environment_default() {
    int threads = std::max(1, omp_get_max_threads());
    if (const char *env = std::getenv("QSTACK_THREADS")) {
        if (auto cap = parse_thread_cap(env)) {
            threads = std::min(threads, *cap);
        }
    }
    return threads;
}

} // namespace

std::optional<int> parse_thread_cap(std::string_view text) {
    int value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 1) {
        return std::nullopt;
    }
    return value;
}

int thread_count() {
    const int forced = g_override.load(std::memory_order_relaxed);
    if (forced > 0) {
        return forced;
    }
    static const int fallback = environment_default();
    return fallback;
}

void set_thread_count(int threads) { g_override.store(std::max(0, threads)); }

bool can_fork() { return thread_count() > 1 && !omp_in_parallel(); }

} // namespace qstack::parallel
