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

#include <cmath>
#include <numbers>
#include <random>

#include "layersim/errors.hpp"
#include "layersim/gates.hpp"
#include "support/oracle.hpp"

using namespace layersim;
using std::numbers::pi;

namespace {

using vec = std::vector<double>;
const Complex I{0.0, 1.0};

GateMatrix make(int q, std::initializer_list<Complex> values) {
    GateMatrix m(q);
    std::copy(values.begin(), values.end(), m.entries.begin());
    return m;
}

std::vector<double> sample_params(GateKind g, std::mt19937_64 &rng) {
    return oracle::random_angles(
        static_cast<std::size_t>(gate_traits(g).param_count), rng);
}

double unitarity_error(const GateMatrix &u) {
    const GateMatrix p = matmul(dagger(u), u);
    return oracle::max_diff(p, GateMatrix::identity(u.qubits));
}

} // namespace

TEST_CASE("trait table") {
    struct Row {
        GateKind g;
        bool diag, anti, perm, real, param;
        int arity;
    };
    // Diagonal and antidiagonal share one column in the trait table; GPI
    // is the only antidiagonal gate.
    const Row rows[] = {
        {GateKind::Z, true, false, false, true, false, 1},
        {GateKind::CZ, true, false, false, true, false, 2},
        {GateKind::Rz, true, false, false, false, true, 1},
        {GateKind::Rzz, true, false, false, false, true, 2},
        {GateKind::GPI, false, true, false, false, false, 1},
        {GateKind::S, true, false, false, false, false, 1},
        {GateKind::CNOT, false, false, true, true, false, 2},
        {GateKind::X, false, false, true, true, false, 1},
        {GateKind::H, false, false, false, true, false, 1},
        {GateKind::Ry, false, false, false, true, true, 1},
        {GateKind::Rx, false, false, false, false, true, 1},
        {GateKind::Rot, false, false, false, false, true, 1},
        {GateKind::GPI2, false, false, false, false, true, 1},
        {GateKind::MS, false, false, false, false, true, 2},
        {GateKind::Sx, false, false, false, false, false, 1},
        {GateKind::ECR, false, false, false, false, false, 2},
        {GateKind::SWAP, false, false, true, true, false, 2},
    };
    for (const Row &r : rows) {
        CAPTURE(gate_name(r.g));
        const TraitFlags t = gate_traits(r.g);
        CHECK(t.diagonal == r.diag);
        CHECK(t.antidiagonal == r.anti);
        CHECK(t.permutation == r.perm);
        CHECK(t.real == r.real);
        CHECK(t.parametrized == r.param);
        CHECK(t.arity == r.arity);
        CHECK_FALSE((t.diagonal && t.antidiagonal));
    }
    CHECK(gate_traits(GateKind::Rot).param_count == 3);
    CHECK(gate_traits(GateKind::MS).param_count == 3);
    CHECK(gate_traits(GateKind::GPI).param_count == 1);
    CHECK(gate_traits(GateKind::H).param_count == 0);
}

TEST_CASE("gate names roundtrip") {
    for (GateKind g : kAllGates) {
        CHECK(parse_gate(gate_name(g)) == g);
    }
    CHECK_THROWS_AS(parse_gate("U3"), InvalidArgument);
}

TEST_CASE("every gate is unitary and matches its trait flags") {
    std::mt19937_64 rng(7);
    for (GateKind g : kAllGates) {
        CAPTURE(gate_name(g));
        for (int draw = 0; draw < 20; ++draw) {
            const GateMatrix u = gate_matrix(g, sample_params(g, rng));
            CHECK(u.qubits == gate_traits(g).arity);
            CHECK(unitarity_error(u) <= 1e-14);
            const TraitFlags t = gate_traits(g);
            for (std::size_t r = 0; r < u.dim(); ++r) {
                for (std::size_t c = 0; c < u.dim(); ++c) {
                    const Complex v = u(r, c);
                    if (t.diagonal && r != c) {
                        CHECK(v == Complex(0.0, 0.0));
                    }
                    if (t.antidiagonal && r + c != u.dim() - 1) {
                        CHECK(v == Complex(0.0, 0.0));
                    }
                    if (t.real) {
                        CHECK(v.imag() == 0.0);
                    }
                    if (t.permutation) {
                        CHECK((v == Complex(0.0, 0.0) ||
                               v == Complex(1.0, 0.0)));
                    }
                }
            }
        }
    }
}

TEST_CASE("fixed gate matrices") {
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(oracle::max_diff(gate_matrix(GateKind::H), make(1, {h, h, h, -h})) <=
          1e-15);
    CHECK(oracle::max_diff(gate_matrix(GateKind::Sx),
                           make(1, {0.5 * (1.0 + I), 0.5 * (1.0 - I),
                                    0.5 * (1.0 - I), 0.5 * (1.0 + I)})) <=
          1e-15);
    CHECK(oracle::max_diff(gate_matrix(GateKind::S), make(1, {1, 0, 0, I})) ==
          0.0);
    CHECK(oracle::max_diff(gate_matrix(GateKind::Z), make(1, {1, 0, 0, -1})) ==
          0.0);
    CHECK(oracle::max_diff(gate_matrix(GateKind::X), make(1, {0, 1, 1, 0})) ==
          0.0);
    CHECK(oracle::max_diff(
              gate_matrix(GateKind::CNOT),
              make(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})) ==
          0.0);
    CHECK(oracle::max_diff(
              gate_matrix(GateKind::SWAP),
              make(2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1})) ==
          0.0);
    CHECK(oracle::max_diff(
              gate_matrix(GateKind::CZ),
              make(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1})) ==
          0.0);
}

TEST_CASE("ECR is the standard echoed cross-resonance gate") {
    const double h = 1.0 / std::sqrt(2.0);
    const GateMatrix expected =
        make(2, {0, h, 0, h * I, h, 0, -h * I, 0, 0, h * I, 0, h, -h * I, 0,
                 h, 0});
    CHECK(oracle::max_diff(gate_matrix(GateKind::ECR), expected) <= 1e-15);
    // ECR = (IX - XY) / sqrt(2) with the first qubit as the high bit.
    const GateMatrix x = gate_matrix(GateKind::X);
    GateMatrix y(1);
    y(0, 1) = -I;
    y(1, 0) = I;
    GateMatrix built(2);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const Complex ix = (r >> 1) == (c >> 1) ? x(r & 1, c & 1) : 0.0;
            const Complex xy = x(r >> 1, c >> 1) * y(r & 1, c & 1);
            built(r, c) = h * (ix - xy);
        }
    }
    CHECK(oracle::max_diff(gate_matrix(GateKind::ECR), built) <= 1e-15);
}

TEST_CASE("rotation gate matrices") {
    std::mt19937_64 rng(11);
    for (int draw = 0; draw < 25; ++draw) {
        const double t = oracle::random_angles(1, rng)[0];
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        CHECK(oracle::max_diff(gate_matrix(GateKind::Rx, vec{t}),
                               make(1, {c, -I * s, -I * s, c})) <= 1e-15);
        CHECK(oracle::max_diff(gate_matrix(GateKind::Ry, vec{t}),
                               make(1, {c, -s, s, c})) <= 1e-15);
        CHECK(oracle::max_diff(gate_matrix(GateKind::Rz, vec{t}),
                               make(1, {std::exp(-I * (t / 2)), 0, 0,
                                        std::exp(I * (t / 2))})) <= 1e-15);
        const Complex m = std::exp(-I * (t / 2)), p = std::exp(I * (t / 2));
        CHECK(oracle::max_diff(gate_matrix(GateKind::Rzz, vec{t}),
                               make(2, {m, 0, 0, 0, 0, p, 0, 0, 0, 0, p, 0, 0,
                                        0, 0, m})) <= 1e-15);
    }
}

TEST_CASE("Rot is Rz(omega) Ry(theta) Rz(phi)") {
    std::mt19937_64 rng(12);
    for (int draw = 0; draw < 25; ++draw) {
        const auto a = oracle::random_angles(3, rng);
        const double phi = a[0], theta = a[1], omega = a[2];
        const GateMatrix expected = matmul(
            gate_matrix(GateKind::Rz, vec{omega}),
            matmul(gate_matrix(GateKind::Ry, vec{theta}),
                   gate_matrix(GateKind::Rz, vec{phi})));
        const GateMatrix rot = gate_matrix(GateKind::Rot, a);
        CHECK(oracle::max_diff(rot, expected) <= 1e-15);

        // Same operator as the three-angle table form Rot(theta, phi', lambda)
        // with phi' = omega and lambda = phi, times exp(-i(phi + omega)/2).
        const double c = std::cos(theta / 2), s = std::sin(theta / 2);
        const Complex g = std::exp(-I * ((phi + omega) / 2));
        const GateMatrix table =
            make(1, {g * c, -g * std::exp(I * phi) * s,
                     g * std::exp(I * omega) * s,
                     g * std::exp(I * (phi + omega)) * c});
        CHECK(oracle::max_diff(rot, table) <= 1e-15);
    }
}

TEST_CASE("IonQ gates take angles in turns") {
    std::mt19937_64 rng(13);
    const double r = 1.0 / std::sqrt(2.0);
    for (int draw = 0; draw < 25; ++draw) {
        const auto a = oracle::random_angles(3, rng);
        const double f = a[0];
        CHECK(oracle::max_diff(gate_matrix(GateKind::GPI, vec{f}),
                               make(1, {0, std::exp(-2 * pi * I * f),
                                        std::exp(2 * pi * I * f), 0})) <=
              1e-15);
        CHECK(oracle::max_diff(gate_matrix(GateKind::GPI2, vec{f}),
                               make(1, {r, -I * r * std::exp(-2 * pi * I * f),
                                        -I * r * std::exp(2 * pi * I * f),
                                        r})) <= 1e-15);

        const double p0 = a[0], p1 = a[1], t = a[2];
        const Complex c = std::cos(pi * t), s = std::sin(pi * t);
        GateMatrix ms(2);
        ms(0, 0) = ms(1, 1) = ms(2, 2) = ms(3, 3) = c;
        ms(0, 3) = -I * std::exp(-2 * pi * I * (p0 + p1)) * s;
        ms(1, 2) = -I * std::exp(-2 * pi * I * (p1 - p0)) * s;
        ms(2, 1) = -I * std::exp(-2 * pi * I * (p0 - p1)) * s;
        // Conjugate of (0, 3) so that the matrix is unitary.
        ms(3, 0) = -I * std::exp(2 * pi * I * (p0 + p1)) * s;
        CHECK(oracle::max_diff(gate_matrix(GateKind::MS, a), ms) <= 1e-15);
    }
}

TEST_CASE("parameter count is enforced") {
    CHECK_THROWS_AS(gate_matrix(GateKind::Rz), InvalidArgument);
    CHECK_THROWS_AS(gate_matrix(GateKind::H, vec{0.1}), InvalidArgument);
    const std::vector<double> two{0.1, 0.2};
    CHECK_THROWS_AS(gate_matrix(GateKind::Rot, two), InvalidArgument);
}

TEST_CASE("analytic derivatives match central differences") {
    std::mt19937_64 rng(14);
    const double h = 1e-6;
    for (GateKind g : kAllGates) {
        const int p = gate_traits(g).param_count;
        if (p == 0) {
            continue;
        }
        CAPTURE(gate_name(g));
        for (int draw = 0; draw < 10; ++draw) {
            const auto params = sample_params(g, rng);
            for (int k = 0; k < p; ++k) {
                auto plus = params, minus = params;
                plus[static_cast<std::size_t>(k)] += h;
                minus[static_cast<std::size_t>(k)] -= h;
                const GateMatrix a = gate_matrix(g, plus);
                const GateMatrix b = gate_matrix(g, minus);
                GateMatrix fd(a.qubits);
                for (std::size_t i = 0; i < fd.entries.size(); ++i) {
                    fd.entries[i] = (a.entries[i] - b.entries[i]) / (2 * h);
                }
                CHECK(oracle::max_diff(gate_derivative(g, params, k), fd) <=
                      1e-7);
            }
        }
    }
}

TEST_CASE("gate phases reproduce (anti)diagonal entries") {
    std::mt19937_64 rng(15);
    for (GateKind g : kAllGates) {
        const TraitFlags t = gate_traits(g);
        if (!t.diagonal && !t.antidiagonal) {
            continue;
        }
        CAPTURE(gate_name(g));
        const auto params = sample_params(g, rng);
        const GateMatrix u = gate_matrix(g, params);
        const auto alpha = gate_phases(g, params);
        REQUIRE(alpha.size() == u.dim());
        for (std::size_t c = 0; c < u.dim(); ++c) {
            const std::size_t r = t.antidiagonal ? u.dim() - 1 - c : c;
            CHECK(std::abs(u(r, c) - std::exp(I * alpha[c])) <= 1e-15);
        }
    }
}
