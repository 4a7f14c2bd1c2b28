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

#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/kernel_id.hpp"
#include "layersim/state.hpp"
#include "layersim/workspace.hpp"

namespace layersim {

/// Kernels able to run `layer` on n qubits, in tie-break order.
std::vector<KernelId> applicable_kernels(const Layer &layer, int n);
bool is_applicable(KernelId kernel, const Layer &layer, int n);

/// Kernel used when no plan is supplied: dense up to 9 qubits, else einsum.
KernelId default_kernel(const Layer &layer, int n);

/// Runs one layer with the chosen kernel (its inverse when `adjoint`).
/// Throws PlanMismatch if the kernel cannot execute the layer.
void apply_layer(const Layer &layer, int n, KernelId kernel,
                 const LayerParams &params, BatchView state, Workspace &ws,
                 bool adjoint = false);

} // namespace layersim
