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
#include <algorithm>
#include <string>

#include "bits.hpp"
#include "layersim/errors.hpp"
#include "layersim/kernels.hpp"

namespace layersim {
namespace {

void check_wires(std::span<const int> wires, int n) {
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if (wires[i] < 0 || wires[i] >= n) {
            throw InvalidArgument("wire " + std::to_string(wires[i]) +
                                  " out of range for n=" + std::to_string(n));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (wires[i] == wires[j]) {
                throw InvalidArgument("repeated wire " +
                                      std::to_string(wires[i]));
            }
        }
    }
}

// State row viewed as [outer, 2, inner] around the wire's axis.
void contract_one(const GateMatrix &u, int pos, std::span<Complex> row) {
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const std::size_t inner = std::size_t{1} << pos;
    for (std::size_t base = 0; base < row.size(); base += 2 * inner) {
        Complex *lo = row.data() + base;
        Complex *hi = lo + inner;
        for (std::size_t i = 0; i < inner; ++i) {
            const Complex a = lo[i];
            const Complex b = hi[i];
            lo[i] = u00 * a + u01 * b;
            hi[i] = u10 * a + u11 * b;
        }
    }
}

// State row viewed as [outer, 2, mid, 2, inner]; the local index is
// (bit of wires[0]) * 2 + (bit of wires[1]).
void contract_two(const GateMatrix &u, int pos_first, int pos_second,
                  std::span<Complex> row) {
    const int hi_pos = std::max(pos_first, pos_second);
    const int lo_pos = std::min(pos_first, pos_second);
    const std::size_t m_first = std::size_t{1} << pos_first;
    const std::size_t m_second = std::size_t{1} << pos_second;
    const std::size_t hi_stride = std::size_t{1} << hi_pos;
    const std::size_t lo_stride = std::size_t{1} << lo_pos;
    const std::array<std::size_t, 4> offs = {0, m_second, m_first,
                                             m_first | m_second};
    Complex mat[4][4];
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            mat[r][c] = u(r, c);
        }
    }
    for (std::size_t outer = 0; outer < row.size(); outer += 2 * hi_stride) {
        for (std::size_t mid = outer; mid < outer + hi_stride;
             mid += 2 * lo_stride) {
            for (std::size_t base = mid; base < mid + lo_stride; ++base) {
                Complex v[4];
                for (std::size_t k = 0; k < 4; ++k) {
                    v[k] = row[base + offs[k]];
                }
                for (std::size_t r = 0; r < 4; ++r) {
                    row[base + offs[r]] = mat[r][0] * v[0] + mat[r][1] * v[1] +
                                          mat[r][2] * v[2] + mat[r][3] * v[3];
                }
            }
        }
    }
}

} // namespace

void apply_einsum(const GateMatrix &local, std::span<const int> wires,
                  BatchView state) {
    if (wires.size() != 1 && wires.size() != 2) {
        throw InvalidArgument("einsum supports 1- and 2-qubit operators");
    }
    if (static_cast<int>(wires.size()) != local.qubits) {
        throw InvalidArgument("operator arity does not match wire count");
    }
    check_wires(wires, state.n);
    const int n = state.n;
    for (std::size_t b = 0; b < state.rows; ++b) {
        if (wires.size() == 1) {
            contract_one(local, n - 1 - wires[0], state.row(b));
        } else {
            contract_two(local, n - 1 - wires[0], n - 1 - wires[1],
                         state.row(b));
        }
    }
}

} // namespace layersim
