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
#include "layersim/grad.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kernels/bits.hpp"
#include "layersim/errors.hpp"
#include "layersim/executor.hpp"

namespace layersim {
namespace {

// <lambda| D |psi> with D acting on `wires` of a single row.
Complex local_overlap(std::span<const Complex> lam, std::span<const Complex> psi,
                      const GateMatrix &d, std::span<const int> wires, int n) {
    Complex acc{0.0, 0.0};
    const std::size_t dim = dim_of(n);
    if (wires.size() == 1) {
        const std::size_t m = detail::wire_mask(n, wires[0]);
        const Complex d00 = d(0, 0), d01 = d(0, 1), d10 = d(1, 0),
                      d11 = d(1, 1);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & m) != 0) {
                continue;
            }
            const Complex p0 = psi[i], p1 = psi[i | m];
            acc += std::conj(lam[i]) * (d00 * p0 + d01 * p1) +
                   std::conj(lam[i | m]) * (d10 * p0 + d11 * p1);
        }
        return acc;
    }
    const std::size_t ma = detail::wire_mask(n, wires[0]);
    const std::size_t mb = detail::wire_mask(n, wires[1]);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & (ma | mb)) != 0) {
            continue;
        }
        const std::size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
        for (std::size_t r = 0; r < 4; ++r) {
            Complex row{0.0, 0.0};
            for (std::size_t c = 0; c < 4; ++c) {
                row += d(r, c) * psi[idx[c]];
            }
            acc += std::conj(lam[idx[r]]) * row;
        }
    }
    return acc;
}

bool wires_disjoint(const std::vector<WireTuple> &tuples) {
    std::vector<int> seen;
    for (const WireTuple &t : tuples) {
        for (int w : t) {
            if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
                return false;
            }
            seen.push_back(w);
        }
    }
    return true;
}

bool has_free_params(const Layer &layer) {
    return layer.params.role != ParamRole::Fixed &&
           gate_traits(layer.gate).param_count > 0;
}

// d/dtheta_k of one gate, pulled to the output side: dG G^dagger.
GateMatrix output_derivative(GateKind gate, std::span<const double> values,
                             int k) {
    return matmul(gate_derivative(gate, values, k),
                  dagger(gate_matrix(gate, values)));
}

void accumulate_gate(const Layer &layer, int n, const LayerParams &params,
                     std::size_t g, const WireTuple &wires, BatchView psi,
                     BatchView lambda, std::span<double> layer_grads) {
    const auto p = static_cast<std::size_t>(gate_traits(layer.gate).param_count);
    const std::size_t width = params.width;
    std::vector<GateMatrix> shared;
    if (params.rows == 1) {
        for (std::size_t k = 0; k < p; ++k) {
            shared.push_back(output_derivative(
                layer.gate, params.row(0).subspan(g * p, p),
                static_cast<int>(k)));
        }
    }
    for (std::size_t b = 0; b < psi.rows; ++b) {
        for (std::size_t k = 0; k < p; ++k) {
            const GateMatrix d =
                params.rows == 1
                    ? shared[k]
                    : output_derivative(layer.gate,
                                        params.row(b).subspan(g * p, p),
                                        static_cast<int>(k));
            const Complex ov =
                local_overlap(lambda.row(b), psi.row(b), d, wires, n);
            layer_grads[b * width + g * p + k] += 2.0 * ov.real();
        }
    }
}

} // namespace

std::vector<double> GradResult::summed_grads() const {
    std::vector<double> out(grads.cols, 0.0);
    for (std::size_t b = 0; b < grads.rows; ++b) {
        for (std::size_t j = 0; j < grads.cols; ++j) {
            out[j] += grads(b, j);
        }
    }
    return out;
}

void apply_z_sum_observable(BatchView state) {
    const std::size_t dim = state.dim();
    for (std::size_t b = 0; b < state.rows; ++b) {
        auto row = state.row(b);
        for (std::size_t i = 0; i < dim; ++i) {
            row[i] *= static_cast<double>(state.n - 2 * std::popcount(i));
        }
    }
}

void backward_layer(const Layer &layer, int n, KernelId kernel,
                    const LayerParams &params, BatchView psi, BatchView lambda,
                    Workspace &ws, std::span<double> layer_grads) {
    if (!has_free_params(layer)) {
        apply_layer(layer, n, kernel, params, psi, ws, true);
        apply_layer(layer, n, kernel, params, lambda, ws, true);
        return;
    }
    if (layer_grads.size() != psi.rows * params.width) {
        throw InvalidArgument("gradient buffer has " +
                              std::to_string(layer_grads.size()) +
                              " slots, layer needs " +
                              std::to_string(psi.rows * params.width));
    }
    const TraitFlags traits = gate_traits(layer.gate);
    const auto tuples = expand_pattern(layer.pattern, n, traits.arity);
    if (traits.diagonal || wires_disjoint(tuples)) {
        // Gates of this layer commute, so every derivative can be taken at
        // the layer output before rewinding with the planned kernel.
        for (std::size_t g = 0; g < tuples.size(); ++g) {
            accumulate_gate(layer, n, params, g, tuples[g], psi, lambda,
                            layer_grads);
        }
        apply_layer(layer, n, kernel, params, psi, ws, true);
        apply_layer(layer, n, kernel, params, lambda, ws, true);
        return;
    }
    const auto p = static_cast<std::size_t>(traits.param_count);
    for (std::size_t step = 0; step < tuples.size(); ++step) {
        const std::size_t g = tuples.size() - 1 - step;
        accumulate_gate(layer, n, params, g, tuples[g], psi, lambda,
                        layer_grads);
        for (std::size_t b = 0; b < psi.rows; ++b) {
            const GateMatrix inv =
                dagger(gate_matrix(layer.gate, params.row(b).subspan(g * p, p)));
            apply_einsum(inv, tuples[g], psi.row_view(b));
            apply_einsum(inv, tuples[g], lambda.row_view(b));
        }
    }
}

void backward_sweep(CircuitRunner &runner,
                    const std::vector<LayerParams> &params, StateBatch &psi,
                    StateBatch &lambda, GradResult &out) {
    const Circuit &circuit = runner.circuit();
    const std::size_t batch = psi.batch();
    std::copy(psi.flat().begin(), psi.flat().end(), lambda.flat().begin());
    apply_z_sum_observable(lambda.view());
    out.grads = RealMatrix(batch, circuit.trainable_count);
    out.encoding_grads = RealMatrix(batch, circuit.encoding_count);
    std::vector<double> layer_grads;
    for (std::size_t step = 0; step < circuit.layers.size(); ++step) {
        const std::size_t l = circuit.layers.size() - 1 - step;
        const Layer &layer = circuit.layers[l];
        const bool free = has_free_params(layer);
        layer_grads.assign(free ? batch * params[l].width : 0, 0.0);
        backward_layer(layer, circuit.n, runner.kernels()[l], params[l],
                       psi.view(), lambda.view(), runner.workspace(),
                       layer_grads);
        if (!free) {
            continue;
        }
        RealMatrix &target = layer.params.role == ParamRole::Trainable
                                 ? out.grads
                                 : out.encoding_grads;
        const std::size_t width = params[l].width;
        for (std::size_t b = 0; b < batch; ++b) {
            for (std::size_t j = 0; j < width; ++j) {
                target(b, layer.params.first_slot + j) +=
                    layer_grads[b * width + j];
            }
        }
    }
}

GradResult gradient(CircuitRunner &runner, std::span<const double> trainable,
                    const RealMatrix &encoding, std::size_t batch) {
    const Circuit &circuit = runner.circuit();
    StateBatch psi = zero_state(circuit.n, batch);
    runner.forward(trainable, encoding, psi);
    GradResult out;
    out.value = expectation_z_sum(psi);
    StateBatch lambda(circuit.n, batch);
    backward_sweep(runner, runner.bind(trainable, encoding), psi, lambda, out);
    return out;
}

GradResult gradient(const Circuit &circuit, std::span<const double> trainable,
                    const RealMatrix &encoding, std::size_t batch,
                    const Plan *plan) {
    CircuitRunner runner(circuit, plan);
    return gradient(runner, trainable, encoding, batch);
}

GradResult fd_gradient(const Circuit &circuit,
                       std::span<const double> trainable,
                       const RealMatrix &encoding, std::size_t batch,
                       double h) {
    if (!(h > 0.0)) {
        throw InvalidArgument("finite-difference step must be positive");
    }
    CircuitRunner runner(circuit);
    auto evaluate = [&](std::span<const double> t, const RealMatrix &e) {
        StateBatch psi = zero_state(circuit.n, batch);
        runner.forward(t, e, psi);
        return expectation_z_sum(psi);
    };
    GradResult out;
    out.value = evaluate(trainable, encoding);
    out.grads = RealMatrix(batch, circuit.trainable_count);
    out.encoding_grads = RealMatrix(batch, circuit.encoding_count);

    std::vector<double> shifted(trainable.begin(), trainable.end());
    for (std::size_t j = 0; j < shifted.size(); ++j) {
        const double saved = shifted[j];
        shifted[j] = saved + h;
        const auto plus = evaluate(shifted, encoding);
        shifted[j] = saved - h;
        const auto minus = evaluate(shifted, encoding);
        shifted[j] = saved;
        for (std::size_t b = 0; b < batch; ++b) {
            out.grads(b, j) = (plus[b] - minus[b]) / (2.0 * h);
        }
    }
    RealMatrix enc = encoding;
    for (std::size_t e = 0; e < enc.cols; ++e) {
        std::vector<double> saved(enc.rows);
        for (std::size_t b = 0; b < enc.rows; ++b) {
            saved[b] = enc(b, e);
            enc(b, e) = saved[b] + h;
        }
        const auto plus = evaluate(trainable, enc);
        for (std::size_t b = 0; b < enc.rows; ++b) {
            enc(b, e) = saved[b] - h;
        }
        const auto minus = evaluate(trainable, enc);
        for (std::size_t b = 0; b < enc.rows; ++b) {
            enc(b, e) = saved[b];
            out.encoding_grads(b, e) = (plus[b] - minus[b]) / (2.0 * h);
        }
    }
    return out;
}

} // namespace layersim
