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
#include "layersim/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "layersim/errors.hpp"

namespace layersim {
namespace {

using std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};

struct GateInfo {
    GateKind kind;
    std::string_view name;
    TraitFlags traits;
};

// diagonal, antidiagonal, permutation, real, parametrized, arity, params
constexpr std::array<GateInfo, 17> kGateTable = {{
    {GateKind::Z, "Z", {true, false, false, true, false, 1, 0}},
    {GateKind::CZ, "CZ", {true, false, false, true, false, 2, 0}},
    {GateKind::Rz, "Rz", {true, false, false, false, true, 1, 1}},
    {GateKind::Rzz, "Rzz", {true, false, false, false, true, 2, 1}},
    {GateKind::GPI, "GPI", {false, true, false, false, false, 1, 1}},
    {GateKind::S, "S", {true, false, false, false, false, 1, 0}},
    {GateKind::CNOT, "CNOT", {false, false, true, true, false, 2, 0}},
    {GateKind::X, "X", {false, false, true, true, false, 1, 0}},
    {GateKind::H, "H", {false, false, false, true, false, 1, 0}},
    {GateKind::Ry, "Ry", {false, false, false, true, true, 1, 1}},
    {GateKind::Rx, "Rx", {false, false, false, false, true, 1, 1}},
    {GateKind::Rot, "Rot", {false, false, false, false, true, 1, 3}},
    {GateKind::GPI2, "GPI2", {false, false, false, false, true, 1, 1}},
    {GateKind::MS, "MS", {false, false, false, false, true, 2, 3}},
    {GateKind::Sx, "Sx", {false, false, false, false, false, 1, 0}},
    {GateKind::ECR, "ECR", {false, false, false, false, false, 2, 0}},
    {GateKind::SWAP, "SWAP", {false, false, true, true, false, 2, 0}},
}};

const GateInfo &info(GateKind kind) {
    for (const auto &entry : kGateTable) {
        if (entry.kind == kind) {
            return entry;
        }
    }
    throw InvalidArgument("unknown gate kind " +
                          std::to_string(static_cast<int>(kind)));
}

void check_params(GateKind kind, std::span<const double> params) {
    const auto &entry = info(kind);
    if (static_cast<int>(params.size()) != entry.traits.param_count) {
        throw InvalidArgument(std::string(entry.name) + " takes " +
                              std::to_string(entry.traits.param_count) +
                              " parameter(s), got " +
                              std::to_string(params.size()));
    }
}

GateMatrix from_rows(int q, std::initializer_list<Complex> values) {
    GateMatrix m(q);
    std::size_t i = 0;
    for (const Complex &v : values) {
        m.entries[i++] = v;
    }
    return m;
}

GateMatrix rz(double theta) {
    return from_rows(1, {std::polar(1.0, -theta / 2), 0.0, 0.0,
                         std::polar(1.0, theta / 2)});
}

GateMatrix rz_prime(double theta) {
    return from_rows(1, {-0.5 * kI * std::polar(1.0, -theta / 2), 0.0, 0.0,
                         0.5 * kI * std::polar(1.0, theta / 2)});
}

GateMatrix ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return from_rows(1, {c, -s, s, c});
}

GateMatrix ry_prime(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return from_rows(1, {-s / 2, -c / 2, c / 2, -s / 2});
}

// MS off-diagonal entries are -i sin(pi theta) exp(i phase) where each phase
// is linear in (phi0, phi1). The (3,0) entry carries +2pi(phi0+phi1) so the
// matrix is unitary; see README "Gate conventions".
struct MsEntry {
    std::size_t row, col;
    double d_phi0, d_phi1; // phase = 2 pi (d_phi0 phi0 + d_phi1 phi1)
};
constexpr std::array<MsEntry, 4> kMsEntries = {{
    {0, 3, -1.0, -1.0},
    {1, 2, 1.0, -1.0},
    {2, 1, -1.0, 1.0},
    {3, 0, 1.0, 1.0},
}};

GateMatrix ms(std::span<const double> p, int derivative) {
    const double phi0 = p[0];
    const double phi1 = p[1];
    const double theta = p[2];
    double cos_term = std::cos(pi * theta);
    double sin_term = std::sin(pi * theta);
    if (derivative == 2) {
        cos_term = -pi * std::sin(pi * theta);
        sin_term = pi * std::cos(pi * theta);
    }
    GateMatrix m(2);
    if (derivative < 0 || derivative == 2) {
        for (std::size_t i = 0; i < 4; ++i) {
            m(i, i) = cos_term;
        }
    }
    for (const auto &e : kMsEntries) {
        const double phase = 2 * pi * (e.d_phi0 * phi0 + e.d_phi1 * phi1);
        Complex v = -kI * sin_term * std::polar(1.0, phase);
        if (derivative == 0) {
            v *= kI * 2.0 * pi * e.d_phi0;
        } else if (derivative == 1) {
            v *= kI * 2.0 * pi * e.d_phi1;
        }
        m(e.row, e.col) = v;
    }
    return m;
}

} // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind parse_gate(std::string_view name) {
    for (const auto &entry : kGateTable) {
        if (entry.name == name) {
            return entry.kind;
        }
    }
    throw InvalidArgument("unknown gate '" + std::string(name) + "'");
}

TraitFlags gate_traits(GateKind kind) { return info(kind).traits; }

GateMatrix GateMatrix::identity(int q) {
    GateMatrix m(q);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

GateMatrix matmul(const GateMatrix &a, const GateMatrix &b) {
    if (a.qubits != b.qubits) {
        throw InvalidArgument("matmul of mismatched matrices");
    }
    GateMatrix out(a.qubits);
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex lhs = a(r, k);
            if (lhs == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

GateMatrix dagger(const GateMatrix &m) {
    GateMatrix out(m.qubits);
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

GateMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    check_params(kind, params);
    switch (kind) {
    case GateKind::Z:
        return from_rows(1, {1.0, 0.0, 0.0, -1.0});
    case GateKind::S:
        return from_rows(1, {1.0, 0.0, 0.0, kI});
    case GateKind::X:
        return from_rows(1, {0.0, 1.0, 1.0, 0.0});
    case GateKind::H:
        return from_rows(1, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
    case GateKind::Sx:
        return from_rows(1, {Complex{0.5, 0.5}, Complex{0.5, -0.5},
                             Complex{0.5, -0.5}, Complex{0.5, 0.5}});
    case GateKind::Rz:
        return rz(params[0]);
    case GateKind::Ry:
        return ry(params[0]);
    case GateKind::Rx: {
        const double c = std::cos(params[0] / 2);
        const double s = std::sin(params[0] / 2);
        return from_rows(1, {c, -kI * s, -kI * s, c});
    }
    case GateKind::Rot:
        return matmul(rz(params[2]), matmul(ry(params[1]), rz(params[0])));
    case GateKind::GPI: {
        const double a = 2 * pi * params[0];
        return from_rows(1, {0.0, std::polar(1.0, -a), std::polar(1.0, a), 0.0});
    }
    case GateKind::GPI2: {
        const double a = 2 * pi * params[0];
        return from_rows(1, {kInvSqrt2, -kI * kInvSqrt2 * std::polar(1.0, -a),
                             -kI * kInvSqrt2 * std::polar(1.0, a), kInvSqrt2});
    }
    case GateKind::CZ:
        return from_rows(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    case GateKind::CNOT:
        return from_rows(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    case GateKind::SWAP:
        return from_rows(2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case GateKind::Rzz: {
        const Complex m = std::polar(1.0, -params[0] / 2);
        const Complex p = std::polar(1.0, params[0] / 2);
        return from_rows(2, {m, 0, 0, 0, 0, p, 0, 0, 0, 0, p, 0, 0, 0, 0, m});
    }
    case GateKind::ECR: {
        const Complex r = kInvSqrt2;
        const Complex ir = kI * kInvSqrt2;
        return from_rows(2, {0, r, 0, ir, r, 0, -ir, 0, 0, ir, 0, r, -ir, 0,
                             r, 0});
    }
    case GateKind::MS:
        return ms(params, -1);
    }
    throw InvalidArgument("unknown gate kind");
}

GateMatrix gate_derivative(GateKind kind, std::span<const double> params,
                           int index) {
    check_params(kind, params);
    if (index < 0 || index >= static_cast<int>(params.size())) {
        throw InvalidArgument(std::string(gate_name(kind)) +
                              " has no parameter " + std::to_string(index));
    }
    switch (kind) {
    case GateKind::Rz:
        return rz_prime(params[0]);
    case GateKind::Ry:
        return ry_prime(params[0]);
    case GateKind::Rx: {
        const double c = std::cos(params[0] / 2);
        const double s = std::sin(params[0] / 2);
        return from_rows(1, {-s / 2, -kI * c / 2.0, -kI * c / 2.0, -s / 2});
    }
    case GateKind::Rot: {
        const double phi = params[0], theta = params[1], omega = params[2];
        if (index == 0) {
            return matmul(rz(omega), matmul(ry(theta), rz_prime(phi)));
        }
        if (index == 1) {
            return matmul(rz(omega), matmul(ry_prime(theta), rz(phi)));
        }
        return matmul(rz_prime(omega), matmul(ry(theta), rz(phi)));
    }
    case GateKind::GPI: {
        const double a = 2 * pi * params[0];
        return from_rows(1, {0.0, -2.0 * pi * kI * std::polar(1.0, -a),
                             2.0 * pi * kI * std::polar(1.0, a), 0.0});
    }
    case GateKind::GPI2: {
        const double a = 2 * pi * params[0];
        return from_rows(1, {0.0, -2.0 * pi * kInvSqrt2 * std::polar(1.0, -a),
                             2.0 * pi * kInvSqrt2 * std::polar(1.0, a), 0.0});
    }
    case GateKind::Rzz: {
        const Complex m = -0.5 * kI * std::polar(1.0, -params[0] / 2);
        const Complex p = 0.5 * kI * std::polar(1.0, params[0] / 2);
        return from_rows(2, {m, 0, 0, 0, 0, p, 0, 0, 0, 0, p, 0, 0, 0, 0, m});
    }
    case GateKind::MS:
        return ms(params, index);
    default:
        break;
    }
    throw InvalidArgument(std::string(gate_name(kind)) + " has no parameters");
}

std::vector<double> gate_phases(GateKind kind, std::span<const double> params) {
    check_params(kind, params);
    switch (kind) {
    case GateKind::Z:
        return {0.0, pi};
    case GateKind::S:
        return {0.0, pi / 2};
    case GateKind::Rz:
        return {-params[0] / 2, params[0] / 2};
    case GateKind::GPI:
        return {2 * pi * params[0], -2 * pi * params[0]};
    case GateKind::CZ:
        return {0.0, 0.0, 0.0, pi};
    case GateKind::Rzz: {
        const double h = params[0] / 2;
        return {-h, h, h, -h};
    }
    default:
        break;
    }
    throw InvalidArgument(std::string(gate_name(kind)) +
                          " is neither diagonal nor antidiagonal");
}

} // namespace layersim
