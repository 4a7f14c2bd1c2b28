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
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "bits.hpp"
#include "layersim/errors.hpp"
#include "layersim/kernels.hpp"

namespace layersim {
namespace {

std::int8_t sign_of_bit(std::size_t i, int n, int wire) {
    return (i & detail::wire_mask(n, wire)) ? std::int8_t{-1} : std::int8_t{1};
}

// Column of K_Rzz carrying the parity of {a, b}, if the pair is
// ring-adjacent.
std::optional<std::size_t> ring_column(int n, int a, int b) {
    if ((a + 1) % n == b) {
        return static_cast<std::size_t>(a);
    }
    if ((b + 1) % n == a) {
        return static_cast<std::size_t>(b);
    }
    return std::nullopt;
}

void multiply_phases(std::span<const double> alpha, std::span<Complex> row,
                     bool conjugate) {
    const double sign = conjugate ? -1.0 : 1.0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const double a = sign * alpha[i];
        const Complex z{std::cos(a), std::sin(a)};
        row[i] *= z;
    }
}

} // namespace

KMatrix build_k_matrix(KKind kind, int n) {
    if (n < 1) {
        throw InvalidArgument("K matrix needs n >= 1");
    }
    if (kind == KKind::Pairs) {
        throw InvalidArgument("use build_pair_k_matrix for pair lists");
    }
    if (kind == KKind::Rzz && n < 2) {
        throw InvalidArgument("K_Rzz needs n >= 2");
    }
    KMatrix km;
    km.n = n;
    km.kind = kind;
    km.cols = static_cast<std::size_t>(n);
    const std::size_t d = dim_of(n);
    km.k.resize(d * km.cols);
    for (std::size_t i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int8_t v = sign_of_bit(i, n, j);
            if (kind == KKind::Rzz) {
                v = static_cast<std::int8_t>(v * sign_of_bit(i, n, (j + 1) % n));
            }
            km.k[i * km.cols + static_cast<std::size_t>(j)] = v;
        }
    }
    return km;
}

KMatrix build_pair_k_matrix(int n,
                            std::span<const std::pair<int, int>> pairs) {
    KMatrix km;
    km.n = n;
    km.kind = KKind::Pairs;
    km.cols = pairs.size();
    const std::size_t d = dim_of(n);
    km.k.resize(d * km.cols);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            km.k[i * km.cols + c] = static_cast<std::int8_t>(
                sign_of_bit(i, n, pairs[c].first) *
                sign_of_bit(i, n, pairs[c].second));
        }
    }
    return km;
}

void apply_phase_program(const PhaseProgram &program, BatchView state,
                         std::vector<double> &alpha_scratch, bool adjoint) {
    const std::size_t d = state.dim();
    if (program.rows != 1 && program.rows != state.rows) {
        throw InvalidArgument("phase program has " +
                              std::to_string(program.rows) +
                              " coefficient rows for a batch of " +
                              std::to_string(state.rows));
    }
    for (const PhaseTerm &t : program.terms) {
        if (!t.k || t.k->n != state.n ||
            t.coeffs.size() != program.rows * t.k->cols) {
            throw InvalidArgument("phase term does not match the state");
        }
    }
    alpha_scratch.resize(d);

    for (std::size_t r = 0; r < program.rows; ++r) {
        const double offset = program.offset.empty() ? 0.0 : program.offset[r];
        std::fill(alpha_scratch.begin(), alpha_scratch.end(), offset);
        for (const PhaseTerm &t : program.terms) {
            const std::size_t cols = t.k->cols;
            const double *c = t.coeffs.data() + r * cols;
            const std::int8_t *k = t.k->k.data();
            for (std::size_t i = 0; i < d; ++i) {
                double acc = 0.0;
                const std::int8_t *krow = k + i * cols;
                for (std::size_t j = 0; j < cols; ++j) {
                    acc += krow[j] * c[j];
                }
                alpha_scratch[i] += acc;
            }
        }
        const std::size_t first = program.rows == 1 ? 0 : r;
        const std::size_t last = program.rows == 1 ? state.rows : r + 1;
        for (std::size_t b = first; b < last; ++b) {
            const BatchView one = state.row_view(b);
            if (adjoint) {
                apply_bit_flip(program.flip_mask, one);
                multiply_phases(alpha_scratch, one.row(0), true);
            } else {
                multiply_phases(alpha_scratch, one.row(0), false);
                apply_bit_flip(program.flip_mask, one);
            }
        }
    }
}

PhaseProgram eigenphase_program(const Layer &layer, int n,
                                const LayerParams &params,
                                const KMatrixProvider &k_provider) {
    const TraitFlags traits = gate_traits(layer.gate);
    if (!traits.diagonal && !traits.antidiagonal) {
        throw InvalidArgument(std::string(gate_name(layer.gate)) +
                              " is neither diagonal nor antidiagonal");
    }
    PhaseProgram program;
    program.rows = params.rows;
    program.offset.assign(params.rows, 0.0);
    const auto un = static_cast<std::size_t>(n);

    if (traits.arity == 1) {
        PhaseTerm single{k_provider(KKind::Rz, n),
                         std::vector<double>(params.rows * un, 0.0)};
        for (std::size_t r = 0; r < params.rows; ++r) {
            const auto wires = detail::fold_wire_phases(layer, n, params.row(r));
            std::size_t mask = 0;
            for (std::size_t w = 0; w < un; ++w) {
                single.coeffs[r * un + w] =
                    (wires[w].phase0 - wires[w].phase1) / 2;
                program.offset[r] += (wires[w].phase0 + wires[w].phase1) / 2;
                if (wires[w].flip) {
                    mask |= detail::wire_mask(n, static_cast<int>(w));
                }
            }
            if (r == 0) {
                program.flip_mask = mask;
            }
        }
        program.terms.push_back(std::move(single));
        return program;
    }

    // Pair layer: alpha(x_a, x_b) = c0 + ca k_a + cb k_b + cab k_a k_b.
    const auto tuples = expand_pattern(layer.pattern, n, 2);
    const auto p = static_cast<std::size_t>(traits.param_count);
    bool all_ring = true;
    for (const auto &t : tuples) {
        all_ring = all_ring && ring_column(n, t[0], t[1]).has_value();
    }
    std::shared_ptr<const KMatrix> pair_k;
    if (all_ring) {
        pair_k = k_provider(KKind::Rzz, n);
    } else {
        std::vector<std::pair<int, int>> pairs;
        for (const auto &t : tuples) {
            pairs.emplace_back(t[0], t[1]);
        }
        pair_k = std::make_shared<const KMatrix>(build_pair_k_matrix(n, pairs));
    }
    PhaseTerm single{k_provider(KKind::Rz, n),
                     std::vector<double>(params.rows * un, 0.0)};
    PhaseTerm pair{pair_k, std::vector<double>(params.rows * pair_k->cols, 0.0)};
    bool any_single = false;
    for (std::size_t r = 0; r < params.rows; ++r) {
        const auto row = params.row(r);
        for (std::size_t g = 0; g < tuples.size(); ++g) {
            const auto a = gate_phases(layer.gate, row.subspan(g * p, p));
            const double c0 = (a[0] + a[1] + a[2] + a[3]) / 4;
            const double ca = (a[0] + a[1] - a[2] - a[3]) / 4;
            const double cb = (a[0] - a[1] + a[2] - a[3]) / 4;
            const double cab = (a[0] - a[1] - a[2] + a[3]) / 4;
            program.offset[r] += c0;
            single.coeffs[r * un + static_cast<std::size_t>(tuples[g][0])] += ca;
            single.coeffs[r * un + static_cast<std::size_t>(tuples[g][1])] += cb;
            any_single = any_single || ca != 0.0 || cb != 0.0;
            const std::size_t col =
                all_ring ? *ring_column(n, tuples[g][0], tuples[g][1]) : g;
            pair.coeffs[r * pair_k->cols + col] += cab;
        }
    }
    if (any_single) {
        program.terms.push_back(std::move(single));
    }
    program.terms.push_back(std::move(pair));
    return program;
}

void apply_eigenphase(const KMatrix &k, std::span<const double> theta,
                      BatchView state) {
    if (k.n != state.n) {
        throw InvalidArgument("K matrix size does not match state");
    }
    if (k.cols == 0 || theta.size() % k.cols != 0) {
        throw InvalidArgument("theta length must be a multiple of K columns");
    }
    PhaseProgram program;
    program.rows = theta.size() / k.cols;
    const double scale =
        (k.kind == KKind::GPI) ? 2.0 * std::numbers::pi : -0.5;
    std::vector<double> coeffs(theta.begin(), theta.end());
    for (double &c : coeffs) {
        c *= scale;
    }
    // Non-owning alias: the caller's K outlives this call.
    program.terms.push_back(
        {std::shared_ptr<const KMatrix>(&k, [](const KMatrix *) {}),
         std::move(coeffs)});
    if (k.kind == KKind::GPI) {
        program.flip_mask = state.dim() - 1;
    }
    std::vector<double> alpha;
    apply_phase_program(program, state, alpha);
}

} // namespace layersim
