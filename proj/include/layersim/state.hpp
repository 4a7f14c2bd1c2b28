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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace layersim {

using Complex = std::complex<double>;

/// Default cap on B * 2^n amplitudes held by one StateBatch (~2 GiB).
inline constexpr std::size_t kDefaultElementBudget = std::size_t{1} << 27;

/// Number of basis states for `n` qubits.
constexpr std::size_t dim_of(int n) { return std::size_t{1} << n; }

/// Mutable view over `rows` contiguous state rows of `2^n` amplitudes each.
///
/// Kernels operate on views so the same code path serves a whole batch and
/// a single row (per-row parametrised layers are executed row by row).
struct BatchView {
    int n = 0;
    std::size_t rows = 0;
    Complex *data = nullptr;

    [[nodiscard]] std::size_t dim() const { return dim_of(n); }
    [[nodiscard]] std::span<Complex> row(std::size_t b) const {
        return {data + b * dim(), dim()};
    }
    [[nodiscard]] BatchView row_view(std::size_t b) const {
        return {n, 1, data + b * dim()};
    }
    [[nodiscard]] std::span<Complex> flat() const {
        return {data, rows * dim()};
    }
};

/// Batched state tensor of shape [B, 2^n]. Qubit 0 is the most significant
/// bit of the basis index.
class StateBatch {
  public:
    StateBatch() = default;
    /// Allocates a zero-filled tensor (not a valid state; see zero_state).
    StateBatch(int n, std::size_t batch,
               std::size_t element_budget = kDefaultElementBudget);

    [[nodiscard]] int qubits() const { return n_; }
    [[nodiscard]] std::size_t batch() const { return batch_; }
    [[nodiscard]] std::size_t dim() const { return dim_of(n_); }

    [[nodiscard]] std::span<Complex> row(std::size_t b) {
        return {amps_.data() + b * dim(), dim()};
    }
    [[nodiscard]] std::span<const Complex> row(std::size_t b) const {
        return {amps_.data() + b * dim(), dim()};
    }
    [[nodiscard]] std::span<Complex> flat() { return amps_; }
    [[nodiscard]] std::span<const Complex> flat() const { return amps_; }

    [[nodiscard]] BatchView view() { return {n_, batch_, amps_.data()}; }

    /// L2 norm of batch row `b`.
    [[nodiscard]] double norm(std::size_t b) const;

    friend bool operator==(const StateBatch &, const StateBatch &) = default;

  private:
    int n_ = 0;
    std::size_t batch_ = 0;
    std::vector<Complex> amps_;
};

/// |0...0> replicated over `batch` rows.
StateBatch zero_state(int n, std::size_t batch,
                      std::size_t element_budget = kDefaultElementBudget);

/// Per-row sum over qubits of <Z_k>, i.e. sum_i |psi_i|^2 (n - 2 popcount(i)).
std::vector<double> expectation_z_sum(const StateBatch &state);

} // namespace layersim
