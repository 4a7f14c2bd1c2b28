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

#include <cstddef>
#include <span>
#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/plan.hpp"
#include "layersim/simulator.hpp"
#include "layersim/state.hpp"

namespace layersim {

/// Gradients of the per-row observable sum_k <Z_k>.
struct GradResult {
    std::vector<double> value;  // one per batch row
    RealMatrix grads;           // batch x trainable_count
    RealMatrix encoding_grads;  // batch x encoding_count

    /// Trainable gradient of the batch-summed objective.
    [[nodiscard]] std::vector<double> summed_grads() const;
};

/// Multiplies each amplitude by n - 2 popcount(i).
void apply_z_sum_observable(BatchView state);

/// Reverse step through one layer. `psi` holds the state after the layer and
/// `lambda` the adjoint state; both are rewound to before the layer.
/// `layer_grads` receives rows x param_width values (row-major) when the
/// layer carries free parameters and may be empty otherwise.
void backward_layer(const Layer &layer, int n, KernelId kernel,
                    const LayerParams &params, BatchView psi, BatchView lambda,
                    Workspace &ws, std::span<double> layer_grads);

/// Full reverse sweep. `psi` must hold the forward output; it and `lambda`
/// are consumed. Writes gradients into `out`, whose value field must
/// already be filled.
void backward_sweep(CircuitRunner &runner,
                    const std::vector<LayerParams> &params, StateBatch &psi,
                    StateBatch &lambda, GradResult &out);

GradResult gradient(CircuitRunner &runner, std::span<const double> trainable,
                    const RealMatrix &encoding, std::size_t batch);

GradResult gradient(const Circuit &circuit, std::span<const double> trainable,
                    const RealMatrix &encoding, std::size_t batch,
                    const Plan *plan = nullptr);

/// Central differences. Encoding columns are shifted for all rows at once,
/// which is exact because rows never interact.
GradResult fd_gradient(const Circuit &circuit,
                       std::span<const double> trainable,
                       const RealMatrix &encoding, std::size_t batch,
                       double h = 1e-6);

} // namespace layersim
