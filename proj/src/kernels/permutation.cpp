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
#include <string>

#include "bits.hpp"
#include "layersim/errors.hpp"
#include "layersim/kernels.hpp"

namespace layersim {
namespace {

// Source index k such that (G psi)[j] = psi[k] for one involutive
// permutation gate.
std::uint64_t source_index(GateKind gate, const WireTuple &w, int n,
                           std::uint64_t j) {
    switch (gate) {
    case GateKind::X:
        return j ^ detail::wire_mask(n, w[0]);
    case GateKind::CNOT:
        return (j & detail::wire_mask(n, w[0])) ? j ^ detail::wire_mask(n, w[1])
                                                : j;
    case GateKind::SWAP: {
        const std::uint64_t ma = detail::wire_mask(n, w[0]);
        const std::uint64_t mb = detail::wire_mask(n, w[1]);
        const bool a = (j & ma) != 0;
        const bool b = (j & mb) != 0;
        return a == b ? j : j ^ ma ^ mb;
    }
    default:
        break;
    }
    throw InvalidArgument(std::string(gate_name(gate)) +
                          " is not a permutation gate");
}

} // namespace

PermVector compose_permutation(const Layer &layer, int n) {
    const TraitFlags traits = gate_traits(layer.gate);
    if (!traits.permutation) {
        throw InvalidArgument(std::string(gate_name(layer.gate)) +
                              " is not a permutation gate");
    }
    const auto tuples = expand_pattern(layer.pattern, n, traits.arity);
    PermVector perm{n, std::vector<std::uint64_t>(dim_of(n))};
    for (std::uint64_t j = 0; j < perm.sigma.size(); ++j) {
        std::uint64_t k = j;
        for (auto it = tuples.rbegin(); it != tuples.rend(); ++it) {
            k = source_index(layer.gate, *it, n, k);
        }
        perm.sigma[j] = k;
    }
    return perm;
}

PermVector inverse(const PermVector &perm) {
    PermVector out{perm.n, std::vector<std::uint64_t>(perm.sigma.size())};
    for (std::uint64_t j = 0; j < perm.sigma.size(); ++j) {
        out.sigma[perm.sigma[j]] = j;
    }
    return out;
}

void apply_permutation(const PermVector &perm, BatchView state,
                       std::vector<Complex> &scratch) {
    if (perm.n != state.n || perm.sigma.size() != state.dim()) {
        throw InvalidArgument("permutation size does not match state");
    }
    scratch.resize(state.dim());
    for (std::size_t b = 0; b < state.rows; ++b) {
        const auto row = state.row(b);
        std::copy(row.begin(), row.end(), scratch.begin());
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = scratch[perm.sigma[j]];
        }
    }
}

void apply_bit_flip(std::size_t mask, BatchView state) {
    if (mask == 0) {
        return;
    }
    for (std::size_t b = 0; b < state.rows; ++b) {
        const auto row = state.row(b);
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::size_t j = i ^ mask;
            if (i < j) {
                std::swap(row[i], row[j]);
            }
        }
    }
}

} // namespace layersim
