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
#include "layersim/gates.hpp"

namespace layersim::detail {

/// Bit of the basis index that carries `wire` (qubit 0 is the MSB).
inline std::size_t wire_mask(int n, int wire) {
    return std::size_t{1} << (n - 1 - wire);
}

/// Net effect of a single-qubit diagonal/antidiagonal layer on one wire:
/// X^{flip} diag(exp(i phase0), exp(i phase1)).
struct WirePhase {
    double phase0 = 0.0;
    double phase1 = 0.0;
    bool flip = false;
    bool touched = false;
};

/// Folds the gates of a single-qubit (anti)diagonal layer into per-wire
/// phases. Later gates act after earlier ones on the same wire.
inline std::vector<WirePhase> fold_wire_phases(const Layer &layer, int n,
                                               std::span<const double> params) {
    const TraitFlags traits = gate_traits(layer.gate);
    const auto p = static_cast<std::size_t>(traits.param_count);
    const auto tuples = expand_pattern(layer.pattern, n, 1);
    std::vector<WirePhase> wires(static_cast<std::size_t>(n));
    for (std::size_t g = 0; g < tuples.size(); ++g) {
        const auto phases = gate_phases(layer.gate, params.subspan(g * p, p));
        WirePhase &w = wires[static_cast<std::size_t>(tuples[g][0])];
        // X^f D(p) X^F D(q) = X^{f^F} D(p permuted by F) D(q)
        if (w.flip) {
            w.phase0 += phases[1];
            w.phase1 += phases[0];
        } else {
            w.phase0 += phases[0];
            w.phase1 += phases[1];
        }
        w.flip = w.flip != traits.antidiagonal;
        w.touched = true;
    }
    return wires;
}

} // namespace layersim::detail
