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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/circuit_io.hpp"
#include "layersim/plan.hpp"
#include "layersim/planner.hpp"
#include "layersim/simulator.hpp"

namespace layersim {

enum class Family { VQ, QDI, IBM, IonQ };

std::string_view family_name(Family family);
Family parse_family(std::string_view name);

/// Calibration phase of the fixed GPI layer in the IonQ family, in turns.
inline constexpr double kIonqGpiPhase = 0.125;

Circuit build_circuit(Family family, int n, int blocks);

/// Uniform draws from [-pi, pi] for every trainable and encoding slot.
CircuitInputs random_inputs(const Circuit &circuit, std::size_t batch,
                            std::uint64_t seed);

struct PhaseTimings {
    TimingStats forward;
    TimingStats backward;
    TimingStats total; // per-rep sum of the two
};

/// Times full forward passes and reverse sweeps from |0...0>.
PhaseTimings time_phases(CircuitRunner &runner, const CircuitInputs &inputs,
                         std::size_t batch, int reps, int warmup, Timer &timer,
                         bool with_backward = true);

/// Largest per-amplitude deviation of the planned forward output from the
/// default-kernel output.
double correctness_gap(const Circuit &circuit, const CircuitInputs &inputs,
                       std::size_t batch, const Plan &plan);

inline constexpr double kCorrectnessTolerance = 1e-12;

struct BenchConfig {
    Family family = Family::VQ;
    int qubits_min = 2;
    int qubits_max = 2;
    std::vector<std::size_t> batches{1};
    int blocks = 8;
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    Objective objective = Objective::ForwardOnly;
    std::uint64_t seed = 0;
    std::filesystem::path out;
    std::optional<std::filesystem::path> plan_path;
    std::size_t element_budget = kDefaultElementBudget;
};

struct BenchRow {
    std::string family;
    int n = 0;
    std::size_t batch = 0;
    std::string phase;
    std::string plan_source;
    double mean_s = 0.0;
    double std_s = 0.0;
    int reps = 0;
    int warmup = 0;
    std::uint64_t seed = 0;
};

struct CrossoverRow {
    std::string family;
    std::string signature; // gate|pattern|role
    int n = 0;
    std::size_t batch = 0;
    std::string kernel;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<CrossoverRow> crossover;
    std::vector<std::string> capacity_errors;
    std::vector<std::string> warnings;
};

/// Runs the sweep and returns the sorted report. Throws CorrectnessError on
/// a failed gate; capacity problems are collected per (n, batch).
BenchReport run_benchmark(const BenchConfig &config, Timer &timer);

void write_bench_csv(const std::vector<BenchRow> &rows, std::ostream &out);
void write_crossover_csv(const std::vector<CrossoverRow> &rows,
                         std::ostream &out);

/// `<out>` with its extension replaced by `.crossover.csv`.
std::filesystem::path crossover_path(const std::filesystem::path &out);

/// Writes both CSV files of a report.
void save_report(const BenchReport &report, const std::filesystem::path &out);

struct KernelSweepRow {
    std::string gate;
    std::string pattern;
    int n = 0;
    std::size_t batch = 0;
    std::string kernel;
    TimingStats stats;
};

/// Times every applicable kernel of one layer over a qubit range.
std::vector<KernelSweepRow>
kernel_sweep(GateKind gate, const WirePattern &pattern, ParamRole role,
             int qubits_min, int qubits_max, std::size_t batch, Timer &timer,
             const TimingOptions &options);

void write_kernel_csv(const std::vector<KernelSweepRow> &rows,
                      std::ostream &out);

/// "A..B" or "A".
std::pair<int, int> parse_qubit_range(std::string_view text);
/// Comma separated positive integers.
std::vector<std::size_t> parse_batch_list(std::string_view text);

} // namespace layersim
