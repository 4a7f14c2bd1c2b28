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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "layersim/state.hpp"

namespace layersim {

enum class GateKind {
    Z,
    CZ,
    Rz,
    Rzz,
    GPI,
    S,
    CNOT,
    X,
    H,
    Ry,
    Rx,
    Rot,
    GPI2,
    MS,
    Sx,
    ECR,
    SWAP,
};

inline constexpr std::array kAllGates = {
    GateKind::Z,   GateKind::CZ,  GateKind::Rz,   GateKind::Rzz,
    GateKind::GPI, GateKind::S,   GateKind::CNOT, GateKind::X,
    GateKind::H,   GateKind::Ry,  GateKind::Rx,   GateKind::Rot,
    GateKind::GPI2, GateKind::MS, GateKind::Sx,   GateKind::ECR,
    GateKind::SWAP,
};

std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; throws InvalidArgument for unknown names.
GateKind parse_gate(std::string_view name);

/// Structural properties that decide which kernels can run a gate layer.
struct TraitFlags {
    bool diagonal = false;
    bool antidiagonal = false;
    bool permutation = false;
    bool real = false;
    bool parametrized = false;
    int arity = 1;
    /// Scalars consumed by gate_matrix. A gate can take a value without
    /// being `parametrized` (GPI's phase is a fixed calibration angle).
    int param_count = 0;
};

TraitFlags gate_traits(GateKind kind);

/// Dense row-major square matrix acting on `qubits` qubits.
struct GateMatrix {
    int qubits = 0;
    std::vector<Complex> entries;

    GateMatrix() = default;
    explicit GateMatrix(int q) : qubits(q), entries(dim() * dim()) {}

    [[nodiscard]] std::size_t dim() const { return dim_of(qubits); }
    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) {
        return entries[r * dim() + c];
    }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return entries[r * dim() + c];
    }
    static GateMatrix identity(int q);
};

GateMatrix matmul(const GateMatrix &a, const GateMatrix &b);
/// Conjugate transpose.
GateMatrix dagger(const GateMatrix &m);

/// Matrix of a single gate. Rotation angles are radians; IonQ gates (GPI,
/// GPI2, MS) take turns. Rot(phi, theta, omega) = Rz(omega) Ry(theta) Rz(phi).
GateMatrix gate_matrix(GateKind kind, std::span<const double> params = {});

/// Analytic partial derivative of gate_matrix with respect to params[index].
GateMatrix gate_derivative(GateKind kind, std::span<const double> params,
                           int index);

/// Phases alpha with diag(D) = exp(i alpha), where the gate equals D for
/// diagonal gates and X^{arity} D for antidiagonal ones (GPI = X D).
/// Length 2^arity, basis order of gate_matrix.
std::vector<double> gate_phases(GateKind kind, std::span<const double> params);

} // namespace layersim
