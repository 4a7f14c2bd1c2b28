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
#include "layersim/kernel_id.hpp"

#include <string>
#include <utility>

#include "layersim/errors.hpp"

namespace layersim {
namespace {

constexpr std::array<std::pair<KernelId, std::string_view>, 9> kNames = {{
    {KernelId::FullUnitary, "full_unitary"},
    {KernelId::RealUnitary, "real_unitary"},
    {KernelId::Einsum, "einsum"},
    {KernelId::Permutation, "permutation"},
    {KernelId::Eigenphase, "eigenphase"},
    {KernelId::DiagTensorProduct, "diag_tp"},
    {KernelId::DiagEinsum, "diag_einsum"},
    {KernelId::HrzExpansion, "hrz_expansion"},
    {KernelId::Fhwt, "fhwt"},
}};

} // namespace

std::string_view kernel_name(KernelId id) {
    for (const auto &[k, name] : kNames) {
        if (k == id) {
            return name;
        }
    }
    throw InvalidArgument("unknown kernel id");
}

KernelId parse_kernel(std::string_view name) {
    for (const auto &[k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    throw InvalidArgument("unknown kernel '" + std::string(name) + "'");
}

} // namespace layersim
