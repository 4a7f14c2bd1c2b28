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
#include "layersim/layer_unitary.hpp"

#include <array>
#include <string>

#include "layersim/errors.hpp"

namespace layersim {
namespace {

void kron_into(const GateMatrix &a, const GateMatrix &b, GateMatrix &out) {
    out.qubits = a.qubits + b.qubits;
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t d = da * db;
    out.entries.resize(d * d);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t rb = 0; rb < db; ++rb) {
            Complex *dst = out.entries.data() + (ra * db + rb) * d;
            for (std::size_t ca = 0; ca < da; ++ca) {
                const Complex x = a(ra, ca);
                const Complex *src = b.entries.data() + rb * db;
                for (std::size_t cb = 0; cb < db; ++cb) {
                    dst[ca * db + cb] = x * src[cb];
                }
            }
        }
    }
}

void set_identity(GateMatrix &m, int n) {
    m.qubits = n;
    const std::size_t d = dim_of(n);
    m.entries.assign(d * d, Complex{});
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 1.0;
    }
}

// m <- E m where E embeds the 4x4 `gate` on wires (a, b); a is the more
// significant bit of the local index.
void left_multiply_pair(GateMatrix &m, const GateMatrix &gate, int n, int a,
                        int b) {
    const std::size_t d = m.dim();
    const std::size_t mask_a = std::size_t{1} << (n - 1 - a);
    const std::size_t mask_b = std::size_t{1} << (n - 1 - b);
    std::vector<Complex> rows(4 * d);
    for (std::size_t base = 0; base < d; ++base) {
        if ((base & mask_a) || (base & mask_b)) {
            continue;
        }
        const std::array<std::size_t, 4> idx = {base, base | mask_b,
                                                base | mask_a,
                                                base | mask_a | mask_b};
        for (std::size_t r = 0; r < 4; ++r) {
            Complex *dst = rows.data() + r * d;
            for (std::size_t c = 0; c < d; ++c) {
                Complex acc{};
                for (std::size_t k = 0; k < 4; ++k) {
                    acc += gate(r, k) * m(idx[k], c);
                }
                dst[c] = acc;
            }
        }
        for (std::size_t r = 0; r < 4; ++r) {
            std::copy_n(rows.data() + r * d, d,
                        m.entries.data() + idx[r] * d);
        }
    }
}

} // namespace

GateMatrix kron(const GateMatrix &a, const GateMatrix &b) {
    GateMatrix out;
    kron_into(a, b, out);
    return out;
}

void layer_unitary_into(const Layer &layer, int n,
                        std::span<const double> params, GateMatrix &out,
                        GateMatrix &scratch, int qubit_limit) {
    if (n > qubit_limit) {
        throw CapacityError("dense layer matrix for n=" + std::to_string(n) +
                            " exceeds the limit of " +
                            std::to_string(qubit_limit) + " qubits");
    }
    const TraitFlags traits = gate_traits(layer.gate);
    const auto tuples = expand_pattern(layer.pattern, n, traits.arity);
    const auto p = static_cast<std::size_t>(traits.param_count);
    if (params.size() != tuples.size() * p) {
        throw InvalidArgument("layer expects " +
                              std::to_string(tuples.size() * p) +
                              " parameters, got " +
                              std::to_string(params.size()));
    }
    auto gate_params = [&](std::size_t g) { return params.subspan(g * p, p); };

    if (traits.arity == 1) {
        std::vector<GateMatrix> per_wire(static_cast<std::size_t>(n),
                                         GateMatrix::identity(1));
        for (std::size_t g = 0; g < tuples.size(); ++g) {
            auto &w = per_wire[static_cast<std::size_t>(tuples[g][0])];
            w = matmul(gate_matrix(layer.gate, gate_params(g)), w);
        }
        // Ping-pong so the final product lands in `out`.
        GateMatrix *cur = (n % 2 == 1) ? &out : &scratch;
        GateMatrix *next = (cur == &out) ? &scratch : &out;
        *cur = per_wire[0];
        for (int q = 1; q < n; ++q) {
            kron_into(*cur, per_wire[static_cast<std::size_t>(q)], *next);
            std::swap(cur, next);
        }
        return;
    }

    set_identity(out, n);
    for (std::size_t g = 0; g < tuples.size(); ++g) {
        left_multiply_pair(out, gate_matrix(layer.gate, gate_params(g)), n,
                           tuples[g][0], tuples[g][1]);
    }
}

GateMatrix layer_unitary(const Layer &layer, int n,
                         std::span<const double> params, int qubit_limit) {
    GateMatrix out;
    GateMatrix scratch;
    layer_unitary_into(layer, n, params, out, scratch, qubit_limit);
    return out;
}

} // namespace layersim
