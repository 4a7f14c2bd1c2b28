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
#include "layersim/circuit_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "layersim/errors.hpp"

namespace layersim {
namespace {

using nlohmann::json;

json parse_document(std::string_view text, const char *what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const json &field(const json &obj, const std::string &name,
                  const std::string &where) {
    if (!obj.is_object() || !obj.contains(name)) {
        throw ParseError("circuit: missing field '" + where + name + "'");
    }
    return obj.at(name);
}

std::vector<double> number_list(const json &v, const std::string &where) {
    if (!v.is_array()) {
        throw ParseError(where + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const json &x : v) {
        if (!x.is_number()) {
            throw ParseError(where + " must be an array of numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

Layer parse_layer(const json &obj, const std::string &where) {
    Layer layer;
    try {
        layer.gate = parse_gate(field(obj, "gate", where).get<std::string>());
        const PatternKind kind =
            parse_pattern(field(obj, "pattern", where).get<std::string>());
        layer.pattern.kind = kind;
        if (kind == PatternKind::Explicit) {
            for (const json &t : field(obj, "wires", where)) {
                layer.pattern.tuples.push_back(t.get<WireTuple>());
            }
        } else if (obj.contains("wires")) {
            throw ParseError("circuit: '" + where +
                             "wires' only applies to explicit patterns");
        }
        layer.params.role =
            parse_role(field(obj, "role", where).get<std::string>());
    } catch (const json::exception &e) {
        throw ParseError("circuit: bad value in '" + where + "': " + e.what());
    } catch (const InvalidArgument &e) {
        throw ParseError("circuit: " + where + " " + e.what());
    }
    if (obj.contains("values")) {
        if (layer.params.role != ParamRole::Fixed) {
            throw ParseError("circuit: '" + where +
                             "values' is only allowed on fixed layers");
        }
        layer.params.values =
            number_list(obj.at("values"), "circuit: '" + where + "values'");
    }
    return layer;
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    const json doc = parse_document(text, "circuit");
    const json &n = field(doc, "n", "");
    if (!n.is_number_integer() || n.get<int>() < 1) {
        throw ParseError("circuit: field 'n' must be a positive integer");
    }
    const json &layers = field(doc, "layers", "");
    if (!layers.is_array()) {
        throw ParseError("circuit: field 'layers' must be an array");
    }
    Circuit circuit;
    circuit.n = n.get<int>();
    for (std::size_t i = 0; i < layers.size(); ++i) {
        Layer layer =
            parse_layer(layers[i], "layers[" + std::to_string(i) + "].");
        std::size_t width = 0;
        try {
            width = param_width(layer, circuit.n);
        } catch (const InvalidArgument &e) {
            throw ParseError("circuit: layers[" + std::to_string(i) + "] " +
                             e.what());
        }
        if (layer.params.role == ParamRole::Trainable) {
            layer.params.first_slot = circuit.trainable_count;
            circuit.trainable_count += width;
        } else if (layer.params.role == ParamRole::Encoding) {
            layer.params.first_slot = circuit.encoding_count;
            circuit.encoding_count += width;
        }
        circuit.layers.push_back(std::move(layer));
    }
    try {
        circuit.validate();
    } catch (const InvalidArgument &e) {
        throw ParseError(std::string("circuit: ") + e.what());
    }
    return circuit;
}

std::string serialize_circuit(const Circuit &circuit) {
    json doc;
    doc["n"] = circuit.n;
    doc["layers"] = json::array();
    for (const Layer &layer : circuit.layers) {
        json l;
        l["gate"] = std::string(gate_name(layer.gate));
        l["pattern"] = std::string(pattern_name(layer.pattern.kind));
        if (layer.pattern.kind == PatternKind::Explicit) {
            l["wires"] = layer.pattern.tuples;
        }
        l["role"] = std::string(role_name(layer.params.role));
        if (layer.params.role == ParamRole::Fixed &&
            !layer.params.values.empty()) {
            l["values"] = layer.params.values;
        }
        doc["layers"].push_back(std::move(l));
    }
    return doc.dump(2) + "\n";
}

Circuit load_circuit(const std::filesystem::path &path) {
    return parse_circuit(read_text_file(path));
}

CircuitInputs parse_inputs(std::string_view text) {
    const json doc = parse_document(text, "params");
    if (!doc.is_object()) {
        throw ParseError("params: document must be an object");
    }
    CircuitInputs out;
    if (doc.contains("trainable")) {
        out.trainable = number_list(doc.at("trainable"), "params: 'trainable'");
    }
    if (doc.contains("encoding")) {
        const json &enc = doc.at("encoding");
        if (!enc.is_array()) {
            throw ParseError("params: 'encoding' must be an array of rows");
        }
        for (std::size_t b = 0; b < enc.size(); ++b) {
            const std::string where =
                "params: 'encoding[" + std::to_string(b) + "]'";
            const auto row = number_list(enc[b], where);
            if (b == 0) {
                out.encoding = RealMatrix(enc.size(), row.size());
            } else if (row.size() != out.encoding.cols) {
                throw ParseError(where + " has " + std::to_string(row.size()) +
                                 " values, expected " +
                                 std::to_string(out.encoding.cols));
            }
            for (std::size_t e = 0; e < row.size(); ++e) {
                out.encoding(b, e) = row[e];
            }
        }
    }
    return out;
}

std::string serialize_inputs(const CircuitInputs &inputs) {
    json doc;
    doc["trainable"] = inputs.trainable;
    doc["encoding"] = json::array();
    for (std::size_t b = 0; b < inputs.encoding.rows; ++b) {
        const auto row = inputs.encoding.row(b);
        doc["encoding"].push_back(std::vector<double>(row.begin(), row.end()));
    }
    return doc.dump(2) + "\n";
}

CircuitInputs load_inputs(const std::filesystem::path &path) {
    return parse_inputs(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace layersim
