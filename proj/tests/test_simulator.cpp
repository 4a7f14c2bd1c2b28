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

#include <random>

#include "layersim/bench.hpp"
#include "layersim/errors.hpp"
#include "layersim/executor.hpp"
#include "layersim/layer_unitary.hpp"
#include "layersim/simulator.hpp"
#include "support/oracle.hpp"

using namespace layersim;

namespace {

// A plan that picks the last applicable kernel for every layer, which tends
// to be the most specialised one.
Plan last_kernel_plan(const Circuit &c) {
    Plan plan;
    plan.n = c.n;
    for (std::size_t i = 0; i < c.layers.size(); ++i) {
        plan.assignments.push_back(
            {i, applicable_kernels(c.layers[i], c.n).back()});
    }
    return plan;
}

Plan einsum_plan(const Circuit &c) {
    Plan plan;
    plan.n = c.n;
    for (std::size_t i = 0; i < c.layers.size(); ++i) {
        plan.assignments.push_back({i, KernelId::Einsum});
    }
    return plan;
}

} // namespace

TEST_CASE("empty circuit is the identity") {
    std::mt19937_64 rng(51);
    const Circuit c = CircuitBuilder(3).build();
    const StateBatch s = oracle::random_state(3, 2, rng);
    CHECK(apply_circuit(c, {}, {}, s) == s);
}

TEST_CASE("X layer flips every qubit") {
    const Circuit c =
        CircuitBuilder(2).fixed(GateKind::X, WirePattern::all_qubits()).build();
    const StateBatch out = apply_circuit(c, {}, {}, zero_state(2, 1));
    CHECK(out.row(0)[3] == Complex(1.0, 0.0));
    CHECK(std::abs(out.row(0)[0]) == 0.0);
}

TEST_CASE("two-qubit VQ block equals the chain of layer unitaries") {
    std::mt19937_64 rng(52);
    const Circuit c = build_circuit(Family::VQ, 2, 1);
    const auto t = oracle::random_angles(c.trainable_count, rng);
    const RealMatrix e = oracle::random_matrix(1, c.encoding_count, rng);
    std::vector<Complex> psi(4);
    psi[0] = 1.0;
    for (const Layer &layer : c.layers) {
        const GateMatrix u =
            layer_unitary(layer, 2, bind_params(layer, 2, t, e).row(0));
        std::vector<Complex> next(4);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t k = 0; k < 4; ++k) {
                next[r] += u(r, k) * psi[k];
            }
        }
        psi = next;
    }
    const StateBatch out = apply_circuit(c, t, e, zero_state(2, 1));
    CHECK(oracle::max_diff(out.row(0), psi) <= 1e-14);
}

TEST_CASE("norm is preserved over a hundred layers") {
    std::mt19937_64 rng(53);
    CircuitBuilder b(5);
    for (int i = 0; i < 25; ++i) {
        b.trainable(GateKind::Rot, WirePattern::all_qubits())
            .trainable(GateKind::MS, WirePattern::ring_pairs())
            .fixed(GateKind::ECR, WirePattern::chain_pairs())
            .encoding(GateKind::GPI2, WirePattern::all_qubits());
    }
    const Circuit c = b.build();
    REQUIRE(c.layers.size() == 100);
    const auto t = oracle::random_angles(c.trainable_count, rng);
    const RealMatrix e = oracle::random_matrix(3, c.encoding_count, rng);
    const Plan special = last_kernel_plan(c);
    const StateBatch plain = apply_circuit(c, t, e, zero_state(5, 3));
    const StateBatch planned = apply_circuit(c, t, e, zero_state(5, 3), &special);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(std::abs(plain.norm(r) - 1.0) <= 1e-10);
        CHECK(std::abs(planned.norm(r) - 1.0) <= 1e-10);
    }
}

TEST_CASE("batch rows evolve independently") {
    std::mt19937_64 rng(54);
    const Circuit c = build_circuit(Family::QDI, 4, 2);
    const auto t = oracle::random_angles(c.trainable_count, rng);
    const RealMatrix e = oracle::random_matrix(4, c.encoding_count, rng);
    const StateBatch batched = apply_circuit(c, t, e, zero_state(4, 4));
    for (std::size_t b = 0; b < 4; ++b) {
        RealMatrix one(1, e.cols);
        std::copy(e.row(b).begin(), e.row(b).end(), one.values.begin());
        const StateBatch single = apply_circuit(c, t, one, zero_state(4, 1));
        CHECK(oracle::max_diff(single.row(0), batched.row(b)) <= 1e-12);
    }
}

TEST_CASE("outputs do not depend on the plan") {
    std::mt19937_64 rng(55);
    for (Family f : {Family::VQ, Family::QDI, Family::IBM, Family::IonQ}) {
        CAPTURE(family_name(f));
        const Circuit c = build_circuit(f, 4, 2);
        const auto t = oracle::random_angles(c.trainable_count, rng);
        const RealMatrix e = oracle::random_matrix(2, c.encoding_count, rng);
        const StateBatch start = oracle::random_state(4, 2, rng);
        const StateBatch reference = oracle::run_circuit(c, t, e, start);
        const Plan plans[] = {last_kernel_plan(c), einsum_plan(c)};
        CHECK(oracle::max_diff(apply_circuit(c, t, e, start), reference) <=
              1e-12);
        for (const Plan &p : plans) {
            CHECK(oracle::max_diff(apply_circuit(c, t, e, start, &p),
                                   reference) <= 1e-12);
        }
    }
}

TEST_CASE("apply_circuit errors") {
    const Circuit c = build_circuit(Family::VQ, 3, 1);
    const std::vector<double> t(c.trainable_count, 0.1);
    const RealMatrix e(1, c.encoding_count, 0.2);
    CHECK_THROWS_AS(apply_circuit(c, {}, e, zero_state(3, 1)), InvalidArgument);
    CHECK_THROWS_AS(apply_circuit(c, t, RealMatrix(2, 3), zero_state(3, 1)),
                    InvalidArgument);
    CHECK_THROWS_AS(apply_circuit(c, t, e, zero_state(4, 1)), InvalidArgument);

    Plan bad = einsum_plan(c);
    bad.assignments[1].kernel = KernelId::Fhwt;
    CHECK_THROWS_AS(apply_circuit(c, t, e, zero_state(3, 1), &bad), PlanMismatch);
    Plan wrong_n = einsum_plan(c);
    wrong_n.n = 4;
    CHECK_THROWS_AS(apply_circuit(c, t, e, zero_state(3, 1), &wrong_n),
                    PlanMismatch);
    Plan short_plan = einsum_plan(c);
    short_plan.assignments.pop_back();
    CHECK_THROWS_AS(apply_circuit(c, t, e, zero_state(3, 1), &short_plan),
                    PlanMismatch);
}
