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

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/kernels.hpp"

namespace layersim {

/// Largest register whose fixed-layer dense matrices are kept in the cache.
inline constexpr int kDenseCacheQubitLimit = 10;

/// Scratch buffers and per-size constants reused across kernel calls.
///
/// Owned by one executor; never shared between threads.
class Workspace {
  public:
    std::vector<Complex> &scratch() { return scratch_; }
    std::vector<double> &alpha() { return alpha_; }
    GateMatrix &matrix() { return matrix_; }
    GateMatrix &matrix_scratch() { return matrix_scratch_; }

    /// K matrices depend only on (kind, n) and are built once.
    std::shared_ptr<const KMatrix> k_matrix(KKind kind, int n);
    KMatrixProvider k_provider();

    const PermVector &permutation(const Layer &layer, int n, bool inverted);

    /// Diagonal of a fixed-parameter layer (computed on first use).
    const DiagVector &fixed_diagonal(const Layer &layer, int n,
                                     std::span<const double> params);

    /// Dense matrix of a fixed-parameter layer, or nullptr above
    /// kDenseCacheQubitLimit.
    const GateMatrix *fixed_matrix(const Layer &layer, int n,
                                   std::span<const double> params);

    /// Rz(pi/2) on every qubit: the constant middle factor of GPI2.
    const DiagVector &gpi2_middle(int n);

    void clear();

  private:
    std::vector<Complex> scratch_;
    std::vector<double> alpha_;
    GateMatrix matrix_;
    GateMatrix matrix_scratch_;
    std::map<std::pair<KKind, int>, std::shared_ptr<const KMatrix>> k_cache_;
    std::map<std::string, PermVector> perm_cache_;
    std::map<std::string, DiagVector> diag_cache_;
    std::map<std::string, GateMatrix> matrix_cache_;
    std::map<int, DiagVector> gpi2_cache_;
};

/// Stable textual key of a layer's structure (and fixed values).
std::string layer_key(const Layer &layer, int n);

} // namespace layersim
