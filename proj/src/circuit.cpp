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
#include "layersim/circuit.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "layersim/errors.hpp"

namespace layersim {
namespace {

constexpr std::array<std::pair<PatternKind, std::string_view>, 4> kPatterns = {{
    {PatternKind::AllQubits, "all"},
    {PatternKind::RingPairs, "ring"},
    {PatternKind::ChainPairs, "chain"},
    {PatternKind::Explicit, "explicit"},
}};

constexpr std::array<std::pair<ParamRole, std::string_view>, 3> kRoles = {{
    {ParamRole::Fixed, "fixed"},
    {ParamRole::Trainable, "trainable"},
    {ParamRole::Encoding, "encoding"},
}};

std::string layer_label(const Layer &layer, std::size_t index) {
    return "layer " + std::to_string(index) + " (" +
           std::string(gate_name(layer.gate)) + ")";
}

} // namespace

std::string_view pattern_name(PatternKind kind) {
    for (const auto &[k, name] : kPatterns) {
        if (k == kind) {
            return name;
        }
    }
    throw InvalidArgument("unknown pattern kind");
}

PatternKind parse_pattern(std::string_view name) {
    for (const auto &[k, n] : kPatterns) {
        if (n == name) {
            return k;
        }
    }
    throw InvalidArgument("unknown wire pattern '" + std::string(name) + "'");
}

std::string_view role_name(ParamRole role) {
    for (const auto &[r, name] : kRoles) {
        if (r == role) {
            return name;
        }
    }
    throw InvalidArgument("unknown parameter role");
}

ParamRole parse_role(std::string_view name) {
    for (const auto &[r, n] : kRoles) {
        if (n == name) {
            return r;
        }
    }
    throw InvalidArgument("unknown parameter role '" + std::string(name) + "'");
}

std::vector<WireTuple> expand_pattern(const WirePattern &pattern, int n,
                                      int arity) {
    if (n < 1) {
        throw InvalidArgument("pattern needs n >= 1");
    }
    std::vector<WireTuple> out;
    switch (pattern.kind) {
    case PatternKind::AllQubits:
        if (arity != 1) {
            throw InvalidArgument("all-qubits pattern requires a 1-qubit gate");
        }
        for (int q = 0; q < n; ++q) {
            out.push_back({q});
        }
        return out;
    case PatternKind::RingPairs:
    case PatternKind::ChainPairs:
        if (arity != 2) {
            throw InvalidArgument("pair patterns require a 2-qubit gate");
        }
        if (n < 2) {
            throw InvalidArgument("pair patterns require n >= 2");
        }
        for (int q = 0; q + 1 < n; ++q) {
            out.push_back({q, q + 1});
        }
        if (pattern.kind == PatternKind::RingPairs && n > 2) {
            out.push_back({n - 1, 0});
        }
        return out;
    case PatternKind::Explicit:
        for (const WireTuple &t : pattern.tuples) {
            if (static_cast<int>(t.size()) != arity) {
                throw InvalidArgument("explicit wire tuple size " +
                                      std::to_string(t.size()) +
                                      " does not match gate arity " +
                                      std::to_string(arity));
            }
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] < 0 || t[i] >= n) {
                    throw InvalidArgument("wire " + std::to_string(t[i]) +
                                          " out of range for n=" +
                                          std::to_string(n));
                }
                for (std::size_t j = 0; j < i; ++j) {
                    if (t[i] == t[j]) {
                        throw InvalidArgument("repeated wire " +
                                              std::to_string(t[i]) +
                                              " in tuple");
                    }
                }
            }
        }
        return pattern.tuples;
    }
    throw InvalidArgument("unknown pattern kind");
}

std::size_t gate_count(const Layer &layer, int n) {
    switch (layer.pattern.kind) {
    case PatternKind::AllQubits:
        return static_cast<std::size_t>(n);
    case PatternKind::RingPairs:
        return n <= 2 ? 1 : static_cast<std::size_t>(n);
    case PatternKind::ChainPairs:
        return static_cast<std::size_t>(n - 1);
    case PatternKind::Explicit:
        return layer.pattern.tuples.size();
    }
    return 0;
}

std::size_t param_width(const Layer &layer, int n) {
    return gate_count(layer, n) *
           static_cast<std::size_t>(gate_traits(layer.gate).param_count);
}

void Circuit::validate() const {
    if (n < 1) {
        throw InvalidArgument("circuit needs n >= 1");
    }
    std::size_t next_trainable = 0;
    std::size_t next_encoding = 0;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const Layer &layer = layers[i];
        const TraitFlags traits = gate_traits(layer.gate);
        try {
            expand_pattern(layer.pattern, n, traits.arity);
        } catch (const InvalidArgument &e) {
            throw InvalidArgument(layer_label(layer, i) + ": " + e.what());
        }
        const std::size_t width = param_width(layer, n);
        const auto p = static_cast<std::size_t>(traits.param_count);
        switch (layer.params.role) {
        case ParamRole::Fixed: {
            const std::size_t got = layer.params.values.size();
            if (got != width && got != p) {
                throw InvalidArgument(layer_label(layer, i) + ": expected " +
                                      std::to_string(width) + " or " +
                                      std::to_string(p) +
                                      " fixed values, got " +
                                      std::to_string(got));
            }
            break;
        }
        case ParamRole::Trainable:
        case ParamRole::Encoding: {
            if (p == 0) {
                throw InvalidArgument(layer_label(layer, i) +
                                      ": gate has no parameters to bind");
            }
            std::size_t &next = layer.params.role == ParamRole::Trainable
                                    ? next_trainable
                                    : next_encoding;
            if (layer.params.first_slot != next) {
                throw InvalidArgument(layer_label(layer, i) +
                                      ": parameter slots are not contiguous");
            }
            next += width;
            break;
        }
        }
    }
    if (next_trainable != trainable_count || next_encoding != encoding_count) {
        throw InvalidArgument("circuit slot counts do not match its layers");
    }
}

CircuitBuilder::CircuitBuilder(int n) { circuit_.n = n; }

CircuitBuilder &CircuitBuilder::fixed(GateKind gate, WirePattern pattern,
                                      std::vector<double> values) {
    circuit_.layers.push_back(
        {gate, std::move(pattern), {ParamRole::Fixed, std::move(values), 0}});
    return *this;
}

CircuitBuilder &CircuitBuilder::trainable(GateKind gate, WirePattern pattern) {
    Layer layer{gate, std::move(pattern),
                {ParamRole::Trainable, {}, circuit_.trainable_count}};
    circuit_.trainable_count += param_width(layer, circuit_.n);
    circuit_.layers.push_back(std::move(layer));
    return *this;
}

CircuitBuilder &CircuitBuilder::encoding(GateKind gate, WirePattern pattern) {
    Layer layer{gate, std::move(pattern),
                {ParamRole::Encoding, {}, circuit_.encoding_count}};
    circuit_.encoding_count += param_width(layer, circuit_.n);
    circuit_.layers.push_back(std::move(layer));
    return *this;
}

Circuit CircuitBuilder::build() const {
    circuit_.validate();
    return circuit_;
}

LayerParams bind_params(const Layer &layer, int n,
                        std::span<const double> trainable,
                        const RealMatrix &encoding) {
    LayerParams out;
    out.width = param_width(layer, n);
    const auto p = static_cast<std::size_t>(gate_traits(layer.gate).param_count);
    switch (layer.params.role) {
    case ParamRole::Fixed:
        if (layer.params.values.size() == out.width) {
            out.values = layer.params.values;
        } else {
            out.values.reserve(out.width);
            for (std::size_t g = 0; p > 0 && g < out.width / p; ++g) {
                out.values.insert(out.values.end(), layer.params.values.begin(),
                                  layer.params.values.end());
            }
        }
        break;
    case ParamRole::Trainable: {
        const std::size_t first = layer.params.first_slot;
        if (first + out.width > trainable.size()) {
            throw InvalidArgument("trainable vector too short for layer");
        }
        out.values.assign(trainable.begin() + static_cast<std::ptrdiff_t>(first),
                          trainable.begin() +
                              static_cast<std::ptrdiff_t>(first + out.width));
        break;
    }
    case ParamRole::Encoding: {
        const std::size_t first = layer.params.first_slot;
        if (first + out.width > encoding.cols || encoding.rows == 0) {
            throw InvalidArgument("encoding matrix too narrow for layer");
        }
        out.rows = encoding.rows;
        out.values.reserve(out.rows * out.width);
        for (std::size_t b = 0; b < encoding.rows; ++b) {
            const auto row = encoding.row(b);
            out.values.insert(out.values.end(),
                              row.begin() + static_cast<std::ptrdiff_t>(first),
                              row.begin() +
                                  static_cast<std::ptrdiff_t>(first + out.width));
        }
        break;
    }
    }
    return out;
}

void check_inputs(const Circuit &circuit, std::span<const double> trainable,
                  const RealMatrix &encoding, std::size_t batch) {
    if (trainable.size() != circuit.trainable_count) {
        throw InvalidArgument("expected " +
                              std::to_string(circuit.trainable_count) +
                              " trainable values, got " +
                              std::to_string(trainable.size()));
    }
    if (circuit.encoding_count == 0) {
        if (encoding.cols != 0) {
            throw InvalidArgument("circuit takes no encoding inputs");
        }
        return;
    }
    if (encoding.cols != circuit.encoding_count || encoding.rows != batch) {
        throw InvalidArgument(
            "encoding matrix must be " + std::to_string(batch) + " x " +
            std::to_string(circuit.encoding_count) + ", got " +
            std::to_string(encoding.rows) + " x " +
            std::to_string(encoding.cols));
    }
}

} // namespace layersim
