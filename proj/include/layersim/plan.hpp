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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "layersim/kernel_id.hpp"

namespace layersim {

enum class Objective { ForwardOnly, ForwardPlusBackward };

std::string_view objective_name(Objective objective);
Objective parse_objective(std::string_view name);

struct TimingStats {
    double mean_seconds = 0.0;
    double std_seconds = 0.0;
    int reps = 0;
    int warmup = 0;
};

struct Assignment {
    std::size_t layer_index = 0;
    KernelId kernel = KernelId::FullUnitary;

    friend bool operator==(const Assignment &, const Assignment &) = default;
};

struct Measurement {
    std::size_t layer_index = 0;
    KernelId kernel = KernelId::FullUnitary;
    double mean_s = 0.0;
    double std_s = 0.0;
    int reps = 0;

    friend bool operator==(const Measurement &, const Measurement &) = default;
};

/// Per-layer kernel assignment for one (circuit, n, batch) target.
struct Plan {
    std::string machine_id;
    int n = 0;
    std::size_t batch = 1;
    Objective objective = Objective::ForwardOnly;
    std::vector<Assignment> assignments;
    std::vector<Measurement> measurements;

    /// Kernel per layer index; throws PlanMismatch unless every layer in
    /// [0, layer_count) has exactly one assignment.
    [[nodiscard]] std::vector<KernelId> kernels(std::size_t layer_count) const;

    friend bool operator==(const Plan &, const Plan &) = default;
};

/// JSON document with fields machine_id, n, batch, objective, assignments,
/// measurements. Doubles are written with round-trip precision.
std::string serialize_plan(const Plan &plan);
/// Throws ParseError naming the offending field or JSON position.
Plan parse_plan(std::string_view text);

void save_plan(const Plan &plan, const std::filesystem::path &path);
Plan load_plan(const std::filesystem::path &path);

/// serialize_plan followed by parse_plan.
Plan plan_roundtrip(const Plan &plan);

/// Host name plus CPU model, informational only.
std::string current_machine_id();

} // namespace layersim
