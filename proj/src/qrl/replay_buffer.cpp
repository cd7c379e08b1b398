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

#include "qstack/qrl/replay_buffer.hpp"

#include "qstack/common/error.hpp"

namespace qstack::qrl {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    require<ConfigError>(capacity >= 1, "replay buffer capacity must be positive");
}

void ReplayBuffer::push(Transition t) {
    if (items_.size() == capacity_) {
        items_.pop_front();
    }
    items_.push_back(std::move(t));
}

std::vector<Transition> ReplayBuffer::sample(std::size_t count, std::mt19937_64 &rng) const {
    require<UsageError>(!items_.empty(), "cannot sample from an empty replay buffer");
    std::uniform_int_distribution<std::size_t> pick(0, items_.size() - 1);
    std::vector<Transition> batch;
    batch.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        batch.push_back(items_[pick(rng)]);
    }
    return batch;
}

} // namespace qstack::qrl
