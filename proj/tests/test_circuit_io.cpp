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
#include "doctest.h"

#include "layersim/bench.hpp"
#include "layersim/circuit_io.hpp"
#include "layersim/errors.hpp"

using namespace layersim;

TEST_CASE("circuit documents roundtrip") {
    for (Family f : {Family::VQ, Family::IBM, Family::IonQ}) {
        const Circuit c = build_circuit(f, 4, 2);
        CHECK(parse_circuit(serialize_circuit(c)) == c);
    }
}

TEST_CASE("circuit parsing assigns slots in layer order") {
    const Circuit c = parse_circuit(R"({
        "n": 3,
        "layers": [
          {"gate": "Ry", "pattern": "all", "role": "trainable"},
          {"gate": "Rz", "pattern": "all", "role": "encoding"},
          {"gate": "MS", "pattern": "explicit", "wires": [[0, 2]], "role": "trainable"},
          {"gate": "GPI", "pattern": "all", "role": "fixed", "values": [0.25]}
        ]})");
    CHECK(c.n == 3);
    CHECK(c.trainable_count == 6);
    CHECK(c.encoding_count == 3);
    CHECK(c.layers[2].params.first_slot == 3);
    CHECK(c.layers[2].pattern.tuples == std::vector<WireTuple>{{0, 2}});
    CHECK(c.layers[3].params.values == std::vector<double>{0.25});
}

TEST_CASE("circuit parse errors") {
    CHECK_THROWS_AS(parse_circuit("{"), ParseError);
    CHECK_THROWS_AS(parse_circuit(R"({"layers": []})"), ParseError);
    CHECK_THROWS_AS(parse_circuit(R"({"n": 0, "layers": []})"), ParseError);
    CHECK_THROWS_AS(
        parse_circuit(R"({"n": 2, "layers": [{"gate": "U3", "pattern": "all", "role": "fixed"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_circuit(R"({"n": 2, "layers": [{"gate": "H", "pattern": "all"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_circuit(R"({"n": 2, "layers": [{"gate": "CZ", "pattern": "explicit", "role": "fixed"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_circuit(R"({"n": 2, "layers": [{"gate": "CZ", "pattern": "explicit", "wires": [[0, 5]], "role": "fixed"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_circuit(R"({"n": 2, "layers": [{"gate": "Rz", "pattern": "all", "role": "trainable", "values": [1]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_circuit(R"({"n": 2, "layers": [{"gate": "H", "pattern": "ring", "role": "fixed"}]})"),
        ParseError);
    try {
        parse_circuit(R"({"n": 2, "layers": [{"pattern": "all", "role": "fixed"}]})");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("layers[0].gate") != std::string::npos);
    }
}

TEST_CASE("input documents") {
    const CircuitInputs in = parse_inputs(
        R"({"trainable": [0.5, -1], "encoding": [[1, 2, 3], [4, 5, 6]]})");
    CHECK(in.trainable == std::vector<double>{0.5, -1.0});
    CHECK(in.encoding.rows == 2);
    CHECK(in.encoding.cols == 3);
    CHECK(in.encoding(1, 2) == 6.0);
    const CircuitInputs back = parse_inputs(serialize_inputs(in));
    CHECK(back.trainable == in.trainable);
    CHECK(back.encoding == in.encoding);
    CHECK(parse_inputs("{}").trainable.empty());
    CHECK_THROWS_AS(parse_inputs(R"({"encoding": [[1, 2], [3]]})"), ParseError);
    CHECK_THROWS_AS(parse_inputs(R"({"trainable": ["a"]})"), ParseError);
}
