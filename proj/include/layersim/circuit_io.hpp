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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "layersim/circuit.hpp"

namespace layersim {

// Circuit documents look like
//   {"n": 3, "layers": [{"gate": "Ry", "pattern": "all", "role": "trainable"},
//                       {"gate": "CNOT", "pattern": "explicit",
//                        "wires": [[0, 2]], "role": "fixed"}]}
// Parameter slots are assigned in layer order.

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit &circuit);
Circuit load_circuit(const std::filesystem::path &path);

/// {"trainable": [...], "encoding": [[row 0], [row 1], ...]}
struct CircuitInputs {
    std::vector<double> trainable;
    RealMatrix encoding;
};

CircuitInputs parse_inputs(std::string_view text);
std::string serialize_inputs(const CircuitInputs &inputs);
CircuitInputs load_inputs(const std::filesystem::path &path);

std::string read_text_file(const std::filesystem::path &path);

} // namespace layersim
