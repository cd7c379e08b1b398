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

#include <stdexcept>
#include <string>

namespace qstack {

/// Base class for every error raised by the library. Callers that do not
/// care about the category can catch this one type.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define QSTACK_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    }

QSTACK_DEFINE_ERROR(ConfigError);
QSTACK_DEFINE_ERROR(ParameterBindingError);
QSTACK_DEFINE_ERROR(ShapeError);
QSTACK_DEFINE_ERROR(AssignmentError);
QSTACK_DEFINE_ERROR(SizeError);
QSTACK_DEFINE_ERROR(UnsupportedGradientError);
QSTACK_DEFINE_ERROR(InternalConsistencyError);
QSTACK_DEFINE_ERROR(InstanceError);
QSTACK_DEFINE_ERROR(OptimizationError);
QSTACK_DEFINE_ERROR(InputError);
QSTACK_DEFINE_ERROR(UsageError);

#undef QSTACK_DEFINE_ERROR

/// Throws `E` with `message` when `condition` is false.
template <class E> inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw E(message);
    }
}

} // namespace qstack
