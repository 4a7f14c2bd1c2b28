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

#include <map>
#include <random>

#include "layersim/bench.hpp"
#include "layersim/errors.hpp"
#include "layersim/executor.hpp"
#include "layersim/planner.hpp"
#include "support/oracle.hpp"

using namespace layersim;

namespace {

const Layer kRz{GateKind::Rz, WirePattern::all_qubits(),
                {ParamRole::Trainable, {}, 0}};

// Measurement source backed by a fixed table; unknown kernels get `rest`.
MeasureFn table(std::map<KernelId, double> means, double rest = 100.0,
                int *calls = nullptr) {
    return [means, rest, calls](KernelId k, const Layer &, int, std::size_t) {
        if (calls != nullptr) {
            ++*calls;
        }
        TimingStats s;
        const auto it = means.find(k);
        s.mean_seconds = it == means.end() ? rest : it->second;
        s.reps = 1;
        return s;
    };
}

} // namespace

TEST_CASE("fake timer statistics") {
    FakeTimer timer({2e-6, 4e-6, 6e-6});
    const TimingStats s =
        time_kernel(KernelId::Einsum, kRz, 3, 1, timer, {3, 0});
    CHECK(s.mean_seconds == doctest::Approx(4e-6));
    CHECK(s.std_seconds == doctest::Approx(std::sqrt(8.0 / 3.0) * 1e-6));
    CHECK(s.reps == 3);
    CHECK(s.warmup == 0);

    FakeTimer flat({5e-6});
    CHECK(time_kernel(KernelId::Eigenphase, kRz, 3, 2, flat).std_seconds == 0.0);
}

TEST_CASE("warmup runs are not timed") {
    FakeTimer timer({1e-6});
    const TimingStats s = time_kernel(KernelId::DiagTensorProduct, kRz, 4, 1,
                                      timer, {10, 3});
    CHECK(timer.intervals() == 10);
    CHECK(s.reps == 10);
    CHECK(s.warmup == 3);

    FakeTimer fb({1e-6});
    time_kernel(KernelId::Einsum, kRz, 4, 2, fb,
                {10, 3, Objective::ForwardPlusBackward});
    CHECK(fb.intervals() == 10);
}

TEST_CASE("steady timer measures positive durations") {
    SteadyTimer timer;
    const TimingStats s = time_kernel(KernelId::FullUnitary, kRz, 6, 2, timer,
                                      {4, 1});
    CHECK(s.mean_seconds > 0.0);
    CHECK(s.std_seconds >= 0.0);
}

TEST_CASE("time_kernel rejects bad requests") {
    FakeTimer timer({1.0});
    CHECK_THROWS_AS(time_kernel(KernelId::Fhwt, kRz, 3, 1, timer), PlanMismatch);
    CHECK_THROWS_AS(time_kernel(KernelId::Einsum, kRz, 3, 1, timer, {0, 3}),
                    InvalidArgument);
    CHECK_THROWS_AS(FakeTimer({}), InvalidArgument);
}

TEST_CASE("assignment is the argmin of the measured means") {
    const Circuit c =
        CircuitBuilder(4).trainable(GateKind::Rz, WirePattern::all_qubits()).build();
    const Plan a = build_plan(c, 1, Objective::ForwardOnly,
                              table({{KernelId::FullUnitary, 5},
                                     {KernelId::Einsum, 8}}));
    REQUIRE(a.assignments.size() == 1);
    CHECK(a.assignments[0].kernel == KernelId::FullUnitary);

    const Plan b = build_plan(c, 1, Objective::ForwardOnly,
                              table({{KernelId::DiagEinsum, 1},
                                     {KernelId::FullUnitary, 5}}));
    CHECK(b.assignments[0].kernel == KernelId::DiagEinsum);
    CHECK(b.measurements.size() == applicable_kernels(c.layers[0], 4).size());
}

TEST_CASE("ties go to the earliest kernel in enum order") {
    const Circuit c =
        CircuitBuilder(4).trainable(GateKind::Rz, WirePattern::all_qubits()).build();
    const Plan all_equal = build_plan(c, 1, Objective::ForwardOnly, table({}, 3.0));
    CHECK(all_equal.assignments[0].kernel == KernelId::FullUnitary);
    const Plan late_tie = build_plan(
        c, 1, Objective::ForwardOnly,
        table({{KernelId::DiagEinsum, 1}, {KernelId::Eigenphase, 1}}));
    CHECK(late_tie.assignments[0].kernel == KernelId::Eigenphase);
}

TEST_CASE("argmin holds for random timing tables") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> pick(1, 6);
    const Circuit c = build_circuit(Family::IonQ, 4, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<std::pair<std::size_t, KernelId>, double> t;
        std::map<std::string, std::size_t> first_of;
        const MeasureFn measure = [&](KernelId k, const Layer &layer, int n,
                                      std::size_t batch) {
            const auto sig = layer_signature(layer, n, batch);
            TimingStats s;
            s.reps = 1;
            s.mean_seconds = pick(rng);
            t[{first_of.emplace(sig, first_of.size()).first->second, k}] =
                s.mean_seconds;
            return s;
        };
        const Plan p = build_plan(c, 2, Objective::ForwardOnly, measure);
        for (const Assignment &a : p.assignments) {
            const Layer &layer = c.layers[a.layer_index];
            const std::size_t id = first_of.at(layer_signature(layer, c.n, 2));
            const auto kernels = applicable_kernels(layer, c.n);
            KernelId best = kernels.front();
            for (KernelId k : kernels) {
                if (t.at({id, k}) < t.at({id, best})) {
                    best = k;
                }
            }
            CHECK(a.kernel == best);
            CHECK(is_applicable(a.kernel, layer, c.n));
        }
    }
}

TEST_CASE("identical layer signatures share one measurement set") {
    const Circuit c = CircuitBuilder(3)
                          .trainable(GateKind::Rz, WirePattern::all_qubits())
                          .fixed(GateKind::H, WirePattern::all_qubits())
                          .trainable(GateKind::Rz, WirePattern::all_qubits())
                          .build();
    int calls = 0;
    const Plan p = build_plan(c, 1, Objective::ForwardOnly,
                              table({{KernelId::Eigenphase, 1}}, 9.0, &calls));
    const auto rz = applicable_kernels(c.layers[0], 3).size();
    const auto h = applicable_kernels(c.layers[1], 3).size();
    CHECK(calls == static_cast<int>(rz + h));
    CHECK(p.assignments[0].kernel == p.assignments[2].kernel);
    CHECK(p.measurements.size() == 2 * rz + h);

    CHECK(layer_signature(c.layers[0], 3, 1) == layer_signature(c.layers[2], 3, 1));
    CHECK(layer_signature(c.layers[0], 3, 1) != layer_signature(c.layers[0], 3, 2));
    CHECK(layer_signature(c.layers[0], 3, 1) != layer_signature(c.layers[0], 4, 1));
    const Layer enc{GateKind::Rz, WirePattern::all_qubits(),
                    {ParamRole::Encoding, {}, 0}};
    CHECK(layer_signature(c.layers[0], 3, 1) != layer_signature(enc, 3, 1));
    const Layer a{GateKind::CZ, WirePattern::explicit_wires({{0, 1}}), {}};
    const Layer b{GateKind::CZ, WirePattern::explicit_wires({{1, 2}}), {}};
    CHECK(layer_signature(a, 3, 1) != layer_signature(b, 3, 1));
}

TEST_CASE("plans are byte-identical under a fixed fake timer") {
    const Circuit c = build_circuit(Family::VQ, 4, 2);
    FakeTimer t1({3e-6, 1e-6, 2e-6});
    FakeTimer t2({3e-6, 1e-6, 2e-6});
    const std::string a = serialize_plan(build_plan(c, 2, t1, {2, 1}));
    const std::string b = serialize_plan(build_plan(c, 2, t2, {2, 1}));
    CHECK(a == b);
}

TEST_CASE("measured plans replay to the oracle output") {
    std::mt19937_64 rng(72);
    const Circuit c = build_circuit(Family::VQ, 4, 8);
    SteadyTimer timer;
    for (Objective o : {Objective::ForwardOnly, Objective::ForwardPlusBackward}) {
        const Plan p = build_plan(c, 2, timer, {2, 1, o});
        CHECK(p.objective == o);
        CHECK(p.assignments.size() == c.layers.size());
        const auto t = oracle::random_angles(c.trainable_count, rng);
        const RealMatrix e = oracle::random_matrix(2, c.encoding_count, rng);
        const StateBatch start = zero_state(4, 2);
        const StateBatch expected = oracle::run_circuit(c, t, e, start);
        CHECK(oracle::max_diff(apply_circuit(c, t, e, start, &p), expected) <=
              1e-12);
    }
}

TEST_CASE("summarize uses the population deviation") {
    const TimingStats s = summarize({1.0, 3.0}, 2);
    CHECK(s.mean_seconds == 2.0);
    CHECK(s.std_seconds == 1.0);
    CHECK(s.warmup == 2);
}
