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
#include <string_view>

namespace layersim {

/// Gate-layer application techniques. Declaration order is the planner's
/// tie-break order.
enum class KernelId {
    FullUnitary,
    RealUnitary,
    Einsum,
    Permutation,
    Eigenphase,
    DiagTensorProduct,
    DiagEinsum,
    HrzExpansion,
    Fhwt,
};

inline constexpr std::array kAllKernels = {
    KernelId::FullUnitary,       KernelId::RealUnitary, KernelId::Einsum,
    KernelId::Permutation,       KernelId::Eigenphase,
    KernelId::DiagTensorProduct, KernelId::DiagEinsum,
    KernelId::HrzExpansion,      KernelId::Fhwt,
};

std::string_view kernel_name(KernelId id);
/// Inverse of kernel_name; throws InvalidArgument.
KernelId parse_kernel(std::string_view name);

} // namespace layersim
