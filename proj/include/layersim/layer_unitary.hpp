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

#include <span>

#include "layersim/circuit.hpp"
#include "layersim/gates.hpp"

namespace layersim {

/// Largest register for which the dense 2^n x 2^n layer matrix is built.
inline constexpr int kOracleQubitLimit = 12;

/// Full 2^n x 2^n matrix of one layer with `params` bound (one batch row):
/// a Kronecker product for single-qubit layers, the ordered product of
/// embedded two-qubit matrices for pair layers.
GateMatrix layer_unitary(const Layer &layer, int n,
                         std::span<const double> params,
                         int qubit_limit = kOracleQubitLimit);

/// As layer_unitary, writing into `out` and using `scratch` as a ping-pong
/// buffer so repeated calls do not reallocate.
void layer_unitary_into(const Layer &layer, int n,
                        std::span<const double> params, GateMatrix &out,
                        GateMatrix &scratch,
                        int qubit_limit = kOracleQubitLimit);

/// Kronecker product a (x) b, `a` on the more significant qubits.
GateMatrix kron(const GateMatrix &a, const GateMatrix &b);

} // namespace layersim
