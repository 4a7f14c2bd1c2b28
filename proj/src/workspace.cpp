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
#include "layersim/workspace.hpp"

#include <numbers>
#include <sstream>

#include "layersim/layer_unitary.hpp"

namespace layersim {

std::string layer_key(const Layer &layer, int n) {
    std::ostringstream out;
    out.precision(17);
    out << gate_name(layer.gate) << '/' << pattern_name(layer.pattern.kind)
        << '/' << n;
    for (const auto &t : layer.pattern.tuples) {
        out << '/';
        for (int w : t) {
            out << w << ',';
        }
    }
    if (layer.params.role == ParamRole::Fixed) {
        out << "/v";
        for (double v : layer.params.values) {
            out << ',' << v;
        }
    }
    return out.str();
}

std::shared_ptr<const KMatrix> Workspace::k_matrix(KKind kind, int n) {
    auto &slot = k_cache_[{kind, n}];
    if (!slot) {
        slot = std::make_shared<const KMatrix>(build_k_matrix(kind, n));
    }
    return slot;
}

KMatrixProvider Workspace::k_provider() {
    return [this](KKind kind, int n) { return k_matrix(kind, n); };
}

const PermVector &Workspace::permutation(const Layer &layer, int n,
                                         bool inverted) {
    const std::string key = layer_key(layer, n) + (inverted ? "/inv" : "");
    auto it = perm_cache_.find(key);
    if (it == perm_cache_.end()) {
        PermVector perm = compose_permutation(layer, n);
        if (inverted) {
            perm = inverse(perm);
        }
        it = perm_cache_.emplace(key, std::move(perm)).first;
    }
    return it->second;
}

const DiagVector &Workspace::fixed_diagonal(const Layer &layer, int n,
                                            std::span<const double> params) {
    const std::string key = layer_key(layer, n);
    auto it = diag_cache_.find(key);
    if (it == diag_cache_.end()) {
        it = diag_cache_.emplace(key, diag_tensor_product(layer, n, params))
                 .first;
    }
    return it->second;
}

const GateMatrix *Workspace::fixed_matrix(const Layer &layer, int n,
                                          std::span<const double> params) {
    if (n > kDenseCacheQubitLimit) {
        return nullptr;
    }
    const std::string key = layer_key(layer, n);
    auto it = matrix_cache_.find(key);
    if (it == matrix_cache_.end()) {
        it = matrix_cache_.emplace(key, layer_unitary(layer, n, params)).first;
    }
    return &it->second;
}

const DiagVector &Workspace::gpi2_middle(int n) {
    auto it = gpi2_cache_.find(n);
    if (it == gpi2_cache_.end()) {
        const Layer rz{GateKind::Rz,
                       WirePattern::all_qubits(),
                       {ParamRole::Fixed, {std::numbers::pi / 2}, 0}};
        const std::vector<double> values(static_cast<std::size_t>(n),
                                         std::numbers::pi / 2);
        it = gpi2_cache_.emplace(n, diag_tensor_product(rz, n, values)).first;
    }
    return it->second;
}

void Workspace::clear() {
    k_cache_.clear();
    perm_cache_.clear();
    diag_cache_.clear();
    matrix_cache_.clear();
    gpi2_cache_.clear();
}

} // namespace layersim
