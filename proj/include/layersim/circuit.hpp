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
#include <string>
#include <vector>

#include "layersim/gates.hpp"

namespace layersim {

enum class PatternKind { AllQubits, RingPairs, ChainPairs, Explicit };

std::string_view pattern_name(PatternKind kind);
PatternKind parse_pattern(std::string_view name);

using WireTuple = std::vector<int>;

/// Where a layer's gates sit. Ring pairs are (0,1),(1,2),...,(n-1,0); for
/// n = 2 the ring collapses to the single pair (0,1).
struct WirePattern {
    PatternKind kind = PatternKind::AllQubits;
    std::vector<WireTuple> tuples; // Explicit only

    static WirePattern all_qubits() { return {PatternKind::AllQubits, {}}; }
    static WirePattern ring_pairs() { return {PatternKind::RingPairs, {}}; }
    static WirePattern chain_pairs() { return {PatternKind::ChainPairs, {}}; }
    static WirePattern explicit_wires(std::vector<WireTuple> t) {
        return {PatternKind::Explicit, std::move(t)};
    }

    friend bool operator==(const WirePattern &, const WirePattern &) = default;
};

/// Wire tuples of `pattern` for an n-qubit register, in application order.
/// Validates arity, distinctness and range.
std::vector<WireTuple> expand_pattern(const WirePattern &pattern, int n,
                                      int arity);

enum class ParamRole { Fixed, Trainable, Encoding };

std::string_view role_name(ParamRole role);
ParamRole parse_role(std::string_view name);

/// Fixed layers carry their values (one per gate scalar, or one gate's worth
/// broadcast to every gate). Trainable/Encoding layers own the slot range
/// [first_slot, first_slot + gates * param_count).
struct ParamBinding {
    ParamRole role = ParamRole::Fixed;
    std::vector<double> values;
    std::size_t first_slot = 0;

    friend bool operator==(const ParamBinding &, const ParamBinding &) = default;
};

struct Layer {
    GateKind gate = GateKind::H;
    WirePattern pattern;
    ParamBinding params;

    friend bool operator==(const Layer &, const Layer &) = default;
};

/// Number of gate applications in `layer` on n qubits.
std::size_t gate_count(const Layer &layer, int n);
/// Scalars the layer consumes per batch row.
std::size_t param_width(const Layer &layer, int n);

struct Circuit {
    int n = 0;
    std::vector<Layer> layers;
    std::size_t trainable_count = 0;
    std::size_t encoding_count = 0;

    /// Throws InvalidArgument on any broken layer or slot invariant.
    void validate() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Appends layers while handing out contiguous parameter slots.
class CircuitBuilder {
  public:
    explicit CircuitBuilder(int n);

    CircuitBuilder &fixed(GateKind gate, WirePattern pattern,
                          std::vector<double> values = {});
    CircuitBuilder &trainable(GateKind gate, WirePattern pattern);
    CircuitBuilder &encoding(GateKind gate, WirePattern pattern);

    [[nodiscard]] Circuit build() const;

  private:
    Circuit circuit_;
};

/// Row-major real matrix; used for B x E encoding inputs and B x P gradients.
struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), values(r * c, fill) {}

    [[nodiscard]] double &operator()(std::size_t r, std::size_t c) {
        return values[r * cols + c];
    }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const {
        return values[r * cols + c];
    }
    [[nodiscard]] std::span<const double> row(std::size_t r) const {
        return {values.data() + r * cols, cols};
    }

    friend bool operator==(const RealMatrix &, const RealMatrix &) = default;
};

/// A layer's scalars resolved against the call-time inputs. `rows` is 1 when
/// every batch row shares the values, else one row of `width` per state row.
struct LayerParams {
    std::vector<double> values;
    std::size_t rows = 1;
    std::size_t width = 0;

    [[nodiscard]] std::span<const double> row(std::size_t b) const {
        return {values.data() + (rows == 1 ? 0 : b) * width, width};
    }
};

LayerParams bind_params(const Layer &layer, int n,
                        std::span<const double> trainable,
                        const RealMatrix &encoding);

/// Checks trainable/encoding shapes against the circuit and batch size.
void check_inputs(const Circuit &circuit, std::span<const double> trainable,
                  const RealMatrix &encoding, std::size_t batch);

} // namespace layersim
