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
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/gates.hpp"
#include "layersim/state.hpp"

namespace layersim {

// ---------------------------------------------------------------------------
// Dense matrix-vector

/// psi <- U psi for every row (U^dagger psi when `adjoint`). With
/// `real_mode` the imaginary parts of U must be exactly zero and the update
/// is U Re(psi) + i U Im(psi).
void apply_full_unitary(const GateMatrix &u, BatchView state, bool real_mode,
                        std::vector<Complex> &scratch, bool adjoint = false);

// ---------------------------------------------------------------------------
// Local contraction

/// Contracts a 1- or 2-qubit matrix against the given wire axes of the
/// [B, 2, ..., 2] state tensor. wires[0] is the more significant local bit.
void apply_einsum(const GateMatrix &local, std::span<const int> wires,
                  BatchView state);

// ---------------------------------------------------------------------------
// Permutations

/// psi'[j] = psi[sigma[j]].
struct PermVector {
    int n = 0;
    std::vector<std::uint64_t> sigma;

    friend bool operator==(const PermVector &, const PermVector &) = default;
};

/// Single permutation equal to applying every gate of a permutation layer in
/// wire-tuple order.
PermVector compose_permutation(const Layer &layer, int n);
PermVector inverse(const PermVector &perm);
void apply_permutation(const PermVector &perm, BatchView state,
                       std::vector<Complex> &scratch);

/// psi'[i ^ mask] = psi[i]: X on every wire whose bit is set in `mask`.
void apply_bit_flip(std::size_t mask, BatchView state);

// ---------------------------------------------------------------------------
// Eigenphase computation

enum class KKind { Rz, Rzz, GPI, Pairs };

/// 2^n x n (or 2^n x pairs) matrix of +-1, row-major. Column j of Rz is +1
/// where qubit j is 0; Rzz column j is the parity of qubits j, (j+1) mod n;
/// Pairs columns are parities of an arbitrary pair list.
struct KMatrix {
    int n = 0;
    KKind kind = KKind::Rz;
    std::size_t cols = 0;
    std::vector<std::int8_t> k;

    [[nodiscard]] int operator()(std::size_t row, std::size_t col) const {
        return k[row * cols + col];
    }
};

KMatrix build_k_matrix(KKind kind, int n);
KMatrix build_pair_k_matrix(int n, std::span<const std::pair<int, int>> pairs);

/// One K matrix with its coefficient block (rows x k.cols, or a single row
/// shared by the batch).
struct PhaseTerm {
    std::shared_ptr<const KMatrix> k;
    std::vector<double> coeffs;
};

/// alpha_b = offset_b + sum_terms K c_b; psi_b <- exp(i alpha_b) o psi_b,
/// followed by the bit flip for antidiagonal layers. `rows` is the number of
/// coefficient rows (1 = shared across the batch).
struct PhaseProgram {
    std::size_t rows = 1;
    std::vector<PhaseTerm> terms;
    std::vector<double> offset; // empty or one entry per coefficient row
    std::size_t flip_mask = 0;
};

void apply_phase_program(const PhaseProgram &program, BatchView state,
                         std::vector<double> &alpha_scratch,
                         bool adjoint = false);

using KMatrixProvider =
    std::function<std::shared_ptr<const KMatrix>(KKind, int)>;

/// Phase program of a diagonal or antidiagonal layer: single-qubit phases go
/// through K_Rz, pair parities through K_Rzz when every pair is ring-adjacent
/// (otherwise through a Pairs matrix built for the layer).
PhaseProgram eigenphase_program(const Layer &layer, int n,
                                const LayerParams &params,
                                const KMatrixProvider &k_provider);

/// Gate-angle front end: Rz and Rzz use theta' = -theta/2, GPI uses
/// theta' = 2 pi phi and reverses the index order afterwards. `theta` holds
/// k.cols values or one block of k.cols per state row.
void apply_eigenphase(const KMatrix &k, std::span<const double> theta,
                      BatchView state);

// ---------------------------------------------------------------------------
// Diagonal layers

/// Layer action X^{flip_mask} diag(d).
struct DiagVector {
    int n = 0;
    std::vector<Complex> d;
    std::size_t flip_mask = 0;
};

struct TensorProductStats {
    std::size_t multiplications = 0;
};

/// Full diagonal of a diagonal or antidiagonal layer built by Kronecker
/// products of per-wire diagonals (pair gates multiply in their embedded
/// diagonals). `params` is one row of the layer's scalars.
DiagVector diag_tensor_product(const Layer &layer, int n,
                               std::span<const double> params,
                               TensorProductStats *stats = nullptr);

void apply_diag(const DiagVector &d, BatchView state, bool adjoint = false);

/// Broadcast multiply of a local 2^l diagonal over the wire axes; with
/// `antidiagonal` the local bits are flipped after the multiply.
void apply_diag_einsum(std::span<const Complex> local_diag,
                       std::span<const int> wires, BatchView state,
                       bool antidiagonal = false, bool adjoint = false);

// ---------------------------------------------------------------------------
// H-Rz expansion and Walsh-Hadamard

/// Angles (a, b, c) with gate = Rz(c) H Rz(b) H Rz(a) exactly.
std::array<double, 3> hrz_angles(GateKind gate, std::span<const double> params);

bool hrz_supported(GateKind gate);

/// Applies an all-qubit rotation layer as Rz . H . Rz . H . Rz layers, with
/// eigenphase Rz factors and FHWT for the H layers. `constant_middle`, when
/// given, replaces the middle Rz factor (GPI2's fixed Rz(pi/2) layer).
void apply_hrz_expansion(const Layer &layer, const LayerParams &params,
                         BatchView state,
                         std::shared_ptr<const KMatrix> k_rz,
                         std::vector<double> &alpha_scratch,
                         const DiagVector *constant_middle = nullptr,
                         bool adjoint = false);

/// In-place Walsh-Hadamard butterfly: H on every qubit.
void fhwt(BatchView state);

} // namespace layersim
