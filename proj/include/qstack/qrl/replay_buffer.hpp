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
#include <deque>
#include <random>
#include <vector>

namespace qstack::qrl {

struct Transition {
    std::vector<double> state;
    int action = 0;
    double reward = 0.0;
    std::vector<double> next_state;
    /// True only for real terminal states; step-cap cut-offs still bootstrap.
    bool done = false;

    friend bool operator==(const Transition &, const Transition &) = default;
};

/// Bounded FIFO of transitions; the oldest entry is evicted first.
class ReplayBuffer {
  public:
    explicit ReplayBuffer(std::size_t capacity);

    void push(Transition t);

    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
    [[nodiscard]] bool empty() const noexcept { return items_.empty(); }

    /// Index 0 is the oldest retained transition.
    [[nodiscard]] const Transition &operator[](std::size_t i) const { return items_[i]; }

    /// `count` uniform draws with replacement. Throws UsageError when empty.
    [[nodiscard]] std::vector<Transition> sample(std::size_t count, std::mt19937_64 &rng) const;

  private:
    std::size_t capacity_;
    std::deque<Transition> items_;
};

} // namespace qstack::qrl
