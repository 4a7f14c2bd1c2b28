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
#include "layersim/executor.hpp"

#include <cmath>
#include <string>

#include "layersim/errors.hpp"
#include "layersim/layer_unitary.hpp"

namespace layersim {
namespace {

constexpr int kDefaultDenseLimit = 9;

template <typename Fn>
void for_each_row_group(const LayerParams &params, BatchView state, Fn &&fn) {
    if (params.rows == 1) {
        fn(params.row(0), state);
        return;
    }
    for (std::size_t b = 0; b < state.rows; ++b) {
        fn(params.row(b), state.row_view(b));
    }
}

void run_dense(const Layer &layer, int n, bool real_mode,
               const LayerParams &params, BatchView state, Workspace &ws,
               bool adjoint) {
    for_each_row_group(params, state, [&](auto values, BatchView view) {
        const GateMatrix *u = nullptr;
        if (layer.params.role == ParamRole::Fixed) {
            u = ws.fixed_matrix(layer, n, values);
        }
        if (u == nullptr) {
            layer_unitary_into(layer, n, values, ws.matrix(),
                               ws.matrix_scratch());
            u = &ws.matrix();
        }
        apply_full_unitary(*u, view, real_mode, ws.scratch(), adjoint);
    });
}

void run_einsum(const Layer &layer, int n, const LayerParams &params,
                BatchView state, bool adjoint) {
    const TraitFlags traits = gate_traits(layer.gate);
    const auto tuples = expand_pattern(layer.pattern, n, traits.arity);
    const auto p = static_cast<std::size_t>(traits.param_count);
    for_each_row_group(params, state, [&](auto values, BatchView view) {
        for (std::size_t step = 0; step < tuples.size(); ++step) {
            const std::size_t g = adjoint ? tuples.size() - 1 - step : step;
            GateMatrix u = gate_matrix(layer.gate, values.subspan(g * p, p));
            if (adjoint) {
                u = dagger(u);
            }
            apply_einsum(u, tuples[g], view);
        }
    });
}

void run_diag_einsum(const Layer &layer, int n, const LayerParams &params,
                     BatchView state, bool adjoint) {
    const TraitFlags traits = gate_traits(layer.gate);
    const auto tuples = expand_pattern(layer.pattern, n, traits.arity);
    const auto p = static_cast<std::size_t>(traits.param_count);
    std::vector<Complex> local;
    for_each_row_group(params, state, [&](auto values, BatchView view) {
        for (std::size_t step = 0; step < tuples.size(); ++step) {
            const std::size_t g = adjoint ? tuples.size() - 1 - step : step;
            const auto phases =
                gate_phases(layer.gate, values.subspan(g * p, p));
            local.resize(phases.size());
            for (std::size_t k = 0; k < phases.size(); ++k) {
                local[k] = {std::cos(phases[k]), std::sin(phases[k])};
            }
            apply_diag_einsum(local, tuples[g], view, traits.antidiagonal,
                              adjoint);
        }
    });
}

void run_diag_tp(const Layer &layer, int n, const LayerParams &params,
                 BatchView state, Workspace &ws, bool adjoint) {
    for_each_row_group(params, state, [&](auto values, BatchView view) {
        if (layer.params.role == ParamRole::Fixed) {
            apply_diag(ws.fixed_diagonal(layer, n, values), view, adjoint);
        } else {
            apply_diag(diag_tensor_product(layer, n, values), view, adjoint);
        }
    });
}

} // namespace

bool is_applicable(KernelId kernel, const Layer &layer, int n) {
    const TraitFlags t = gate_traits(layer.gate);
    const bool all = layer.pattern.kind == PatternKind::AllQubits;
    switch (kernel) {
    case KernelId::FullUnitary:
        return n <= kOracleQubitLimit;
    case KernelId::RealUnitary:
        return t.real && n <= kOracleQubitLimit;
    case KernelId::Einsum:
        return true;
    case KernelId::Permutation:
        return t.permutation;
    case KernelId::Eigenphase:
    case KernelId::DiagTensorProduct:
    case KernelId::DiagEinsum:
        return t.diagonal || t.antidiagonal;
    case KernelId::HrzExpansion:
        return hrz_supported(layer.gate) && all;
    case KernelId::Fhwt:
        return layer.gate == GateKind::H && all;
    }
    return false;
}

std::vector<KernelId> applicable_kernels(const Layer &layer, int n) {
    std::vector<KernelId> out;
    for (KernelId k : kAllKernels) {
        if (is_applicable(k, layer, n)) {
            out.push_back(k);
        }
    }
    return out;
}

KernelId default_kernel(const Layer & /*layer*/, int n) {
    return n <= kDefaultDenseLimit ? KernelId::FullUnitary : KernelId::Einsum;
}

void apply_layer(const Layer &layer, int n, KernelId kernel,
                 const LayerParams &params, BatchView state, Workspace &ws,
                 bool adjoint) {
    if (!is_applicable(kernel, layer, n)) {
        throw PlanMismatch("kernel " + std::string(kernel_name(kernel)) +
                           " cannot run a " +
                           std::string(gate_name(layer.gate)) + " layer on " +
                           std::to_string(n) + " qubits");
    }
    if (state.n != n) {
        throw InvalidArgument("state has " + std::to_string(state.n) +
                              " qubits, layer expects " + std::to_string(n));
    }
    if (params.rows != 1 && params.rows != state.rows) {
        throw InvalidArgument("layer parameters have " +
                              std::to_string(params.rows) +
                              " rows for a batch of " +
                              std::to_string(state.rows));
    }
    switch (kernel) {
    case KernelId::FullUnitary:
        run_dense(layer, n, false, params, state, ws, adjoint);
        return;
    case KernelId::RealUnitary:
        run_dense(layer, n, true, params, state, ws, adjoint);
        return;
    case KernelId::Einsum:
        run_einsum(layer, n, params, state, adjoint);
        return;
    case KernelId::Permutation:
        apply_permutation(ws.permutation(layer, n, adjoint), state,
                          ws.scratch());
        return;
    case KernelId::Eigenphase:
        apply_phase_program(eigenphase_program(layer, n, params,
                                               ws.k_provider()),
                            state, ws.alpha(), adjoint);
        return;
    case KernelId::DiagTensorProduct:
        run_diag_tp(layer, n, params, state, ws, adjoint);
        return;
    case KernelId::DiagEinsum:
        run_diag_einsum(layer, n, params, state, adjoint);
        return;
    case KernelId::HrzExpansion:
        apply_hrz_expansion(layer, params, state, ws.k_matrix(KKind::Rz, n),
                            ws.alpha(),
                            layer.gate == GateKind::GPI2 ? &ws.gpi2_middle(n)
                                                         : nullptr,
                            adjoint);
        return;
    case KernelId::Fhwt:
        fhwt(state);
        return;
    }
}

} // namespace layersim
