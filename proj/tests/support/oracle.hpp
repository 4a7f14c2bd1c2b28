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

// Test-only reference simulator: applies gates one at a time by direct
// index arithmetic, sharing no code with the library kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/gates.hpp"
#include "layersim/state.hpp"

namespace oracle {

using layersim::Complex;

inline std::size_t bit_of(std::size_t index, int n, int wire) {
    return (index >> (n - 1 - wire)) & 1U;
}

inline std::size_t with_bit(std::size_t index, int n, int wire,
                            std::size_t value) {
    const std::size_t m = std::size_t{1} << (n - 1 - wire);
    return value != 0 ? (index | m) : (index & ~m);
}

/// psi <- G psi for a gate on `wires` (first wire is the high local bit).
inline void apply_gate(const layersim::GateMatrix &g,
                       std::span<const int> wires, int n,
                       std::vector<Complex> &psi) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t local = g.dim();
    const auto k = wires.size();
    std::vector<Complex> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t r = 0;
        for (std::size_t w = 0; w < k; ++w) {
            r = (r << 1) | bit_of(i, n, wires[w]);
        }
        Complex acc = 0.0;
        for (std::size_t c = 0; c < local; ++c) {
            std::size_t j = i;
            for (std::size_t w = 0; w < k; ++w) {
                j = with_bit(j, n, wires[w], (c >> (k - 1 - w)) & 1U);
            }
            acc += g(r, c) * psi[j];
        }
        out[i] = acc;
    }
    psi = std::move(out);
}

inline void apply_layer(const layersim::Layer &layer, int n,
                        std::span<const double> values,
                        std::vector<Complex> &psi) {
    const auto traits = layersim::gate_traits(layer.gate);
    const auto p = static_cast<std::size_t>(traits.param_count);
    const auto tuples = layersim::expand_pattern(layer.pattern, n, traits.arity);
    for (std::size_t g = 0; g < tuples.size(); ++g) {
        apply_gate(layersim::gate_matrix(layer.gate, values.subspan(g * p, p)),
                   tuples[g], n, psi);
    }
}

/// Applies a layer to every row, with per-row parameters when rows > 1.
inline void apply_layer(const layersim::Layer &layer, int n,
                        const layersim::LayerParams &params,
                        layersim::StateBatch &state) {
    for (std::size_t b = 0; b < state.batch(); ++b) {
        std::vector<Complex> row(state.row(b).begin(), state.row(b).end());
        apply_layer(layer, n, params.row(b), row);
        std::copy(row.begin(), row.end(), state.row(b).begin());
    }
}

inline layersim::StateBatch run_circuit(const layersim::Circuit &c,
                                        std::span<const double> trainable,
                                        const layersim::RealMatrix &encoding,
                                        layersim::StateBatch state) {
    for (const auto &layer : c.layers) {
        apply_layer(layer, c.n,
                    layersim::bind_params(layer, c.n, trainable, encoding),
                    state);
    }
    return state;
}

inline void fill_random(layersim::StateBatch &state, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    for (std::size_t b = 0; b < state.batch(); ++b) {
        double s = 0.0;
        for (auto &a : state.row(b)) {
            a = {normal(rng), normal(rng)};
            s += std::norm(a);
        }
        for (auto &a : state.row(b)) {
            a /= std::sqrt(s);
        }
    }
}

inline layersim::StateBatch random_state(int n, std::size_t batch,
                                         std::mt19937_64 &rng) {
    layersim::StateBatch s(n, batch);
    fill_random(s, rng);
    return s;
}

inline std::vector<double> random_angles(std::size_t count,
                                         std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi,
                                             std::numbers::pi);
    std::vector<double> out(count);
    for (auto &v : out) {
        v = u(rng);
    }
    return out;
}

inline layersim::RealMatrix random_matrix(std::size_t rows, std::size_t cols,
                                          std::mt19937_64 &rng) {
    layersim::RealMatrix m(rows, cols);
    m.values = random_angles(rows * cols, rng);
    return m;
}

inline double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

inline double max_diff(const layersim::StateBatch &a,
                       const layersim::StateBatch &b) {
    return max_diff(a.flat(), b.flat());
}

inline double max_diff(const layersim::GateMatrix &a,
                       const layersim::GateMatrix &b) {
    return max_diff(std::span<const Complex>(a.entries),
                    std::span<const Complex>(b.entries));
}

/// Random parameters for a layer: shared for Trainable, per row for Encoding.
inline layersim::LayerParams random_layer_params(const layersim::Layer &layer,
                                                 int n, std::size_t batch,
                                                 std::mt19937_64 &rng) {
    using layersim::ParamRole;
    if (layer.params.role == ParamRole::Fixed) {
        return layersim::bind_params(layer, n, {}, {});
    }
    layersim::LayerParams p;
    p.width = layersim::param_width(layer, n);
    p.rows = layer.params.role == ParamRole::Encoding ? batch : 1;
    p.values = random_angles(p.rows * p.width, rng);
    return p;
}

} // namespace oracle
