// Copyright 2026 The layersim Authors.
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

namespace layersim {

/// Malformed arguments: shape mismatches, bad wires, unknown names.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured element budget or the oracle size limit.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A plan assigns a kernel that cannot execute the layer it is attached to.
class PlanMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Plan, circuit or parameter file could not be parsed.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Planned and default execution disagree beyond tolerance.
class CorrectnessError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace layersim
