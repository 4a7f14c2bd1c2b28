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
#include <algorithm>
#include <cmath>
#include <string>

#include "bits.hpp"
#include "layersim/errors.hpp"
#include "layersim/kernels.hpp"

namespace layersim {
namespace {

Complex unit(double phase) { return {std::cos(phase), std::sin(phase)}; }

} // namespace

DiagVector diag_tensor_product(const Layer &layer, int n,
                               std::span<const double> params,
                               TensorProductStats *stats) {
    const TraitFlags traits = gate_traits(layer.gate);
    if (!traits.diagonal && !traits.antidiagonal) {
        throw InvalidArgument(std::string(gate_name(layer.gate)) +
                              " is neither diagonal nor antidiagonal");
    }
    DiagVector out;
    out.n = n;
    std::size_t mults = 0;

    if (traits.arity == 1) {
        const auto wires = detail::fold_wire_phases(layer, n, params);
        out.d.reserve(dim_of(n));
        out.d = {unit(wires[0].phase0), unit(wires[0].phase1)};
        std::vector<Complex> next;
        for (std::size_t w = 1; w < wires.size(); ++w) {
            const Complex d0 = unit(wires[w].phase0);
            const Complex d1 = unit(wires[w].phase1);
            next.resize(2 * out.d.size());
            for (std::size_t i = 0; i < out.d.size(); ++i) {
                next[2 * i] = out.d[i] * d0;
                next[2 * i + 1] = out.d[i] * d1;
            }
            mults += next.size();
            out.d.swap(next);
        }
        for (std::size_t w = 0; w < wires.size(); ++w) {
            if (wires[w].flip) {
                out.flip_mask |= detail::wire_mask(n, static_cast<int>(w));
            }
        }
    } else {
        const auto tuples = expand_pattern(layer.pattern, n, 2);
        const auto p = static_cast<std::size_t>(traits.param_count);
        out.d.assign(dim_of(n), Complex{1.0, 0.0});
        for (std::size_t g = 0; g < tuples.size(); ++g) {
            const auto phases =
                gate_phases(layer.gate, params.subspan(g * p, p));
            const std::array<Complex, 4> local = {
                unit(phases[0]), unit(phases[1]), unit(phases[2]),
                unit(phases[3])};
            const std::size_t ma = detail::wire_mask(n, tuples[g][0]);
            const std::size_t mb = detail::wire_mask(n, tuples[g][1]);
            for (std::size_t i = 0; i < out.d.size(); ++i) {
                const std::size_t loc =
                    ((i & ma) ? 2u : 0u) | ((i & mb) ? 1u : 0u);
                out.d[i] *= local[loc];
            }
            mults += out.d.size();
        }
    }
    if (stats) {
        stats->multiplications = mults;
    }
    return out;
}

void apply_diag(const DiagVector &d, BatchView state, bool adjoint) {
    if (d.n != state.n || d.d.size() != state.dim()) {
        throw InvalidArgument("diagonal size does not match state");
    }
    for (std::size_t b = 0; b < state.rows; ++b) {
        const BatchView one = state.row_view(b);
        const auto row = one.row(0);
        if (adjoint) {
            apply_bit_flip(d.flip_mask, one);
            for (std::size_t i = 0; i < row.size(); ++i) {
                row[i] *= std::conj(d.d[i]);
            }
        } else {
            for (std::size_t i = 0; i < row.size(); ++i) {
                row[i] *= d.d[i];
            }
            apply_bit_flip(d.flip_mask, one);
        }
    }
}

void apply_diag_einsum(std::span<const Complex> local_diag,
                       std::span<const int> wires, BatchView state,
                       bool antidiagonal, bool adjoint) {
    const int n = state.n;
    if (wires.size() != 1 && wires.size() != 2) {
        throw InvalidArgument("diagonal einsum supports 1- and 2-qubit gates");
    }
    if (local_diag.size() != dim_of(static_cast<int>(wires.size()))) {
        throw InvalidArgument("local diagonal length does not match wires");
    }
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if (wires[i] < 0 || wires[i] >= n ||
            (i == 1 && wires[0] == wires[1])) {
            throw InvalidArgument("invalid wires for diagonal einsum");
        }
    }
    if (antidiagonal && wires.size() != 1) {
        throw InvalidArgument("antidiagonal einsum supports 1-qubit gates");
    }

    if (wires.size() == 1) {
        const std::size_t inner = detail::wire_mask(n, wires[0]);
        Complex d0 = local_diag[0];
        Complex d1 = local_diag[1];
        if (adjoint) {
            d0 = std::conj(d0);
            d1 = std::conj(d1);
        }
        for (std::size_t b = 0; b < state.rows; ++b) {
            const auto row = state.row(b);
            for (std::size_t base = 0; base < row.size(); base += 2 * inner) {
                Complex *lo = row.data() + base;
                Complex *hi = lo + inner;
                for (std::size_t i = 0; i < inner; ++i) {
                    if (!antidiagonal) {
                        lo[i] *= d0;
                        hi[i] *= d1;
                    } else if (!adjoint) {
                        // X D: out0 = d1 psi1, out1 = d0 psi0
                        const Complex a = lo[i];
                        lo[i] = d1 * hi[i];
                        hi[i] = d0 * a;
                    } else {
                        // D* X: out0 = d0* psi1, out1 = d1* psi0
                        const Complex a = lo[i];
                        lo[i] = d0 * hi[i];
                        hi[i] = d1 * a;
                    }
                }
            }
        }
        return;
    }

    std::array<Complex, 4> local;
    for (std::size_t k = 0; k < 4; ++k) {
        local[k] = adjoint ? std::conj(local_diag[k]) : local_diag[k];
    }
    const std::size_t ma = detail::wire_mask(n, wires[0]);
    const std::size_t mb = detail::wire_mask(n, wires[1]);
    const std::size_t hi = std::max(ma, mb);
    const std::size_t lo = std::min(ma, mb);
    for (std::size_t b = 0; b < state.rows; ++b) {
        const auto row = state.row(b);
        for (std::size_t outer = 0; outer < row.size(); outer += 2 * hi) {
            for (std::size_t mid = outer; mid < outer + hi; mid += 2 * lo) {
                for (std::size_t base = mid; base < mid + lo; ++base) {
                    row[base] *= local[0];
                    row[base | mb] *= local[1];
                    row[base | ma] *= local[2];
                    row[base | ma | mb] *= local[3];
                }
            }
        }
    }
}

} // namespace layersim
