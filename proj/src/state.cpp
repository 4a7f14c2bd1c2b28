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
#include "layersim/state.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "layersim/errors.hpp"

namespace layersim {

StateBatch::StateBatch(int n, std::size_t batch, std::size_t element_budget)
    : n_(n), batch_(batch) {
    if (n < 1 || batch < 1) {
        throw InvalidArgument("state needs n >= 1 and batch >= 1 (got n=" +
                              std::to_string(n) +
                              ", batch=" + std::to_string(batch) + ")");
    }
    if (n >= 62 || dim_of(n) > element_budget / batch) {
        throw CapacityError("state of " + std::to_string(batch) + " x 2^" +
                            std::to_string(n) +
                            " amplitudes exceeds element budget " +
                            std::to_string(element_budget));
    }
    amps_.assign(batch * dim_of(n), Complex{});
}

double StateBatch::norm(std::size_t b) const {
    double sum = 0.0;
    for (const Complex &a : row(b)) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateBatch zero_state(int n, std::size_t batch, std::size_t element_budget) {
    StateBatch state(n, batch, element_budget);
    for (std::size_t b = 0; b < batch; ++b) {
        state.row(b)[0] = 1.0;
    }
    return state;
}

std::vector<double> expectation_z_sum(const StateBatch &state) {
    const int n = state.qubits();
    std::vector<double> out(state.batch(), 0.0);
    for (std::size_t b = 0; b < state.batch(); ++b) {
        const auto amps = state.row(b);
        double acc = 0.0;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            acc += std::norm(amps[i]) *
                   static_cast<double>(n - 2 * std::popcount(i));
        }
        out[b] = acc;
    }
    return out;
}

} // namespace layersim
