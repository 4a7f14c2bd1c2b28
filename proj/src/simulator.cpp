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
#include "layersim/simulator.hpp"

#include <string>

#include "layersim/errors.hpp"
#include "layersim/executor.hpp"

namespace layersim {

CircuitRunner::CircuitRunner(Circuit circuit, const Plan *plan)
    : circuit_(std::move(circuit)) {
    circuit_.validate();
    const std::size_t count = circuit_.layers.size();
    if (plan == nullptr) {
        kernels_.reserve(count);
        for (const Layer &layer : circuit_.layers) {
            kernels_.push_back(default_kernel(layer, circuit_.n));
        }
        return;
    }
    if (plan->n != circuit_.n) {
        throw PlanMismatch("plan targets " + std::to_string(plan->n) +
                           " qubits, circuit has " +
                           std::to_string(circuit_.n));
    }
    kernels_ = plan->kernels(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!is_applicable(kernels_[i], circuit_.layers[i], circuit_.n)) {
            throw PlanMismatch(
                "plan assigns " + std::string(kernel_name(kernels_[i])) +
                " to layer " + std::to_string(i) + " (" +
                std::string(gate_name(circuit_.layers[i].gate)) +
                "), which it cannot run");
        }
    }
}

std::vector<LayerParams>
CircuitRunner::bind(std::span<const double> trainable,
                    const RealMatrix &encoding) const {
    std::vector<LayerParams> out;
    out.reserve(circuit_.layers.size());
    for (const Layer &layer : circuit_.layers) {
        out.push_back(bind_params(layer, circuit_.n, trainable, encoding));
    }
    return out;
}

void CircuitRunner::forward(std::span<const double> trainable,
                            const RealMatrix &encoding, StateBatch &state) {
    if (state.qubits() != circuit_.n) {
        throw InvalidArgument("state has " + std::to_string(state.qubits()) +
                              " qubits, circuit has " +
                              std::to_string(circuit_.n));
    }
    check_inputs(circuit_, trainable, encoding, state.batch());
    forward_bound(bind(trainable, encoding), state.view());
}

void CircuitRunner::forward_bound(const std::vector<LayerParams> &params,
                                  BatchView state) {
    for (std::size_t i = 0; i < circuit_.layers.size(); ++i) {
        apply(i, params[i], state);
    }
}

void CircuitRunner::apply(std::size_t layer_index, const LayerParams &params,
                          BatchView state, bool adjoint) {
    apply_layer(circuit_.layers[layer_index], circuit_.n, kernels_[layer_index],
                params, state, ws_, adjoint);
}

StateBatch apply_circuit(const Circuit &circuit,
                         std::span<const double> trainable,
                         const RealMatrix &encoding, StateBatch state,
                         const Plan *plan) {
    CircuitRunner runner(circuit, plan);
    runner.forward(trainable, encoding, state);
    return state;
}

} // namespace layersim
