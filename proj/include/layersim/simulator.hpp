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
#include "layersim/kernel_id.hpp"
#include "layersim/plan.hpp"
#include "layersim/state.hpp"
#include "layersim/workspace.hpp"

namespace layersim {

/// Resolves one kernel per layer (from a plan or the defaults) and owns the
/// caches those kernels reuse across calls.
class CircuitRunner {
  public:
    explicit CircuitRunner(Circuit circuit, const Plan *plan = nullptr);

    [[nodiscard]] const Circuit &circuit() const { return circuit_; }
    [[nodiscard]] const std::vector<KernelId> &kernels() const {
        return kernels_;
    }
    Workspace &workspace() { return ws_; }

    [[nodiscard]] std::vector<LayerParams>
    bind(std::span<const double> trainable, const RealMatrix &encoding) const;

    void forward(std::span<const double> trainable, const RealMatrix &encoding,
                 StateBatch &state);

    /// Forward pass with parameters bound ahead of time.
    void forward_bound(const std::vector<LayerParams> &params, BatchView state);

    void apply(std::size_t layer_index, const LayerParams &params,
               BatchView state, bool adjoint = false);

  private:
    Circuit circuit_;
    std::vector<KernelId> kernels_;
    Workspace ws_;
};

StateBatch apply_circuit(const Circuit &circuit,
                         std::span<const double> trainable,
                         const RealMatrix &encoding, StateBatch state,
                         const Plan *plan = nullptr);

} // namespace layersim
