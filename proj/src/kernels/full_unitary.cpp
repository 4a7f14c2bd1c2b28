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
#include <string>

#include "layersim/errors.hpp"
#include "layersim/kernels.hpp"

namespace layersim {

void apply_full_unitary(const GateMatrix &u, BatchView state, bool real_mode,
                        std::vector<Complex> &scratch, bool adjoint) {
    const std::size_t d = state.dim();
    if (u.dim() != d) {
        throw InvalidArgument("unitary of dimension " +
                              std::to_string(u.dim()) +
                              " does not match state dimension " +
                              std::to_string(d));
    }
    if (real_mode) {
        for (const Complex &z : u.entries) {
            if (z.imag() != 0.0) {
                throw InvalidArgument(
                    "real-split application needs a real matrix");
            }
        }
    }
    scratch.resize(d);
    const Complex *m = u.entries.data();

    for (std::size_t b = 0; b < state.rows; ++b) {
        const auto row = state.row(b);
        if (real_mode) {
            // Split into two real vectors laid out in the scratch buffer.
            auto *re = reinterpret_cast<double *>(scratch.data());
            double *im = re + d;
            for (std::size_t i = 0; i < d; ++i) {
                re[i] = row[i].real();
                im[i] = row[i].imag();
            }
            if (!adjoint) {
                for (std::size_t r = 0; r < d; ++r) {
                    const Complex *urow = m + r * d;
                    double acc_re = 0.0;
                    double acc_im = 0.0;
                    for (std::size_t c = 0; c < d; ++c) {
                        const double a = urow[c].real();
                        acc_re += a * re[c];
                        acc_im += a * im[c];
                    }
                    row[r] = {acc_re, acc_im};
                }
            } else {
                std::fill(row.begin(), row.end(), Complex{});
                auto *out = reinterpret_cast<double *>(row.data());
                for (std::size_t c = 0; c < d; ++c) {
                    const Complex *urow = m + c * d;
                    const double xr = re[c];
                    const double xi = im[c];
                    for (std::size_t r = 0; r < d; ++r) {
                        const double a = urow[r].real();
                        out[2 * r] += a * xr;
                        out[2 * r + 1] += a * xi;
                    }
                }
            }
            continue;
        }

        std::copy(row.begin(), row.end(), scratch.begin());
        const Complex *x = scratch.data();
        if (!adjoint) {
            for (std::size_t r = 0; r < d; ++r) {
                const Complex *urow = m + r * d;
                double acc_re = 0.0;
                double acc_im = 0.0;
                for (std::size_t c = 0; c < d; ++c) {
                    const double ar = urow[c].real();
                    const double ai = urow[c].imag();
                    acc_re += ar * x[c].real() - ai * x[c].imag();
                    acc_im += ar * x[c].imag() + ai * x[c].real();
                }
                row[r] = {acc_re, acc_im};
            }
        } else {
            std::fill(row.begin(), row.end(), Complex{});
            auto *out = reinterpret_cast<double *>(row.data());
            for (std::size_t c = 0; c < d; ++c) {
                const Complex *urow = m + c * d;
                const double xr = x[c].real();
                const double xi = x[c].imag();
                for (std::size_t r = 0; r < d; ++r) {
                    // conj(U[c][r]) * x[c]
                    const double ar = urow[r].real();
                    const double ai = -urow[r].imag();
                    out[2 * r] += ar * xr - ai * xi;
                    out[2 * r + 1] += ar * xi + ai * xr;
                }
            }
        }
    }
}

} // namespace layersim
