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
#include <cmath>
#include <numbers>
#include <string>

#include "layersim/errors.hpp"
#include "layersim/kernels.hpp"

namespace layersim {
namespace {

using std::numbers::pi;

// Rz(angle) on every wire as a K_Rz phase program: theta' = -angle / 2.
PhaseProgram rz_program(const std::shared_ptr<const KMatrix> &k_rz,
                        const LayerParams &params, GateKind gate, int n,
                        std::size_t slot, bool &any_nonzero) {
    const auto un = static_cast<std::size_t>(n);
    const auto p = static_cast<std::size_t>(gate_traits(gate).param_count);
    PhaseProgram prog;
    prog.rows = params.rows;
    PhaseTerm term{k_rz, std::vector<double>(params.rows * un)};
    any_nonzero = false;
    for (std::size_t r = 0; r < params.rows; ++r) {
        const auto row = params.row(r);
        for (std::size_t w = 0; w < un; ++w) {
            const double angle = hrz_angles(gate, row.subspan(w * p, p))[slot];
            term.coeffs[r * un + w] = -angle / 2;
            any_nonzero = any_nonzero || angle != 0.0;
        }
    }
    prog.terms.push_back(std::move(term));
    return prog;
}

} // namespace

bool hrz_supported(GateKind gate) {
    return gate == GateKind::Rx || gate == GateKind::Ry ||
           gate == GateKind::Rot || gate == GateKind::GPI2;
}

std::array<double, 3> hrz_angles(GateKind gate, std::span<const double> params) {
    switch (gate) {
    case GateKind::Rx:
        return {0.0, params[0], 0.0};
    case GateKind::Ry:
        // S H Rz H S^dagger with the S phases folded into Rz(+-pi/2).
        return {-pi / 2, params[0], pi / 2};
    case GateKind::Rot:
        return {params[0] - pi / 2, params[1], params[2] + pi / 2};
    case GateKind::GPI2:
        return {-2 * pi * params[0], pi / 2, 2 * pi * params[0]};
    default:
        break;
    }
    throw InvalidArgument("H-Rz expansion does not support " +
                          std::string(gate_name(gate)));
}

void fhwt(BatchView state) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    for (std::size_t b = 0; b < state.rows; ++b) {
        const auto row = state.row(b);
        for (std::size_t h = 1; h < row.size(); h <<= 1) {
            for (std::size_t base = 0; base < row.size(); base += 2 * h) {
                Complex *lo = row.data() + base;
                Complex *hi = lo + h;
                for (std::size_t i = 0; i < h; ++i) {
                    const Complex x = lo[i];
                    const Complex y = hi[i];
                    lo[i] = (x + y) * kInvSqrt2;
                    hi[i] = (x - y) * kInvSqrt2;
                }
            }
        }
    }
}

void apply_hrz_expansion(const Layer &layer, const LayerParams &params,
                         BatchView state, std::shared_ptr<const KMatrix> k_rz,
                         std::vector<double> &alpha_scratch,
                         const DiagVector *constant_middle, bool adjoint) {
    if (!hrz_supported(layer.gate)) {
        throw InvalidArgument("H-Rz expansion does not support " +
                              std::string(gate_name(layer.gate)));
    }
    if (layer.pattern.kind != PatternKind::AllQubits) {
        throw InvalidArgument("H-Rz expansion needs an all-qubits layer");
    }
    if (!k_rz || k_rz->kind != KKind::Rz || k_rz->n != state.n) {
        throw InvalidArgument("H-Rz expansion needs K_Rz for the state size");
    }
    const int n = state.n;
    std::array<PhaseProgram, 3> factors;
    std::array<bool, 3> active{};
    for (std::size_t slot = 0; slot < 3; ++slot) {
        factors[slot] = rz_program(k_rz, params, layer.gate, n, slot,
                                   active[slot]);
    }
    auto apply_factor = [&](std::size_t slot) {
        if (slot == 1 && constant_middle != nullptr) {
            apply_diag(*constant_middle, state, adjoint);
        } else if (active[slot]) {
            apply_phase_program(factors[slot], state, alpha_scratch, adjoint);
        }
    };
    // gate = Rz(c) H Rz(b) H Rz(a); the adjoint runs the factors reversed.
    apply_factor(adjoint ? 2 : 0);
    fhwt(state);
    apply_factor(1);
    fhwt(state);
    apply_factor(adjoint ? 0 : 2);
}

} // namespace layersim
