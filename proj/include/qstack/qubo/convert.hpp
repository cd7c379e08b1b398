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

#include <span>
#include <vector>

#include "qstack/qubo/model.hpp"

// Conversions use x = (1 - s) / 2, so spin +1 is bit 0 and spin -1 is bit 1.
namespace qstack::qubo {

IsingModel qubo_to_ising(const QuboModel &model);
QuboModel ising_to_qubo(const IsingModel &model);

std::vector<int> spins_from_bits(std::span<const int> x);
std::vector<int> bits_from_spins(std::span<const int> s);

} // namespace qstack::qubo
