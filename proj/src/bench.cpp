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
#include "layersim/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "layersim/errors.hpp"
#include "layersim/executor.hpp"
#include "layersim/grad.hpp"

namespace layersim {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 4> kFamilies = {{
    {Family::VQ, "vq"},
    {Family::QDI, "qdi"},
    {Family::IBM, "ibm"},
    {Family::IonQ, "ionq"},
}};

void reset_to_zero_state(StateBatch &state) {
    std::fill(state.flat().begin(), state.flat().end(), Complex{0.0, 0.0});
    for (std::size_t b = 0; b < state.batch(); ++b) {
        state.row(b)[0] = 1.0;
    }
}

std::string short_signature(const Layer &layer) {
    std::string sig = std::string(gate_name(layer.gate)) + "|" +
                      std::string(pattern_name(layer.pattern.kind)) + "|" +
                      std::string(role_name(layer.params.role));
    return sig;
}

std::string format_double(double v) {
    std::ostringstream out;
    out << std::setprecision(9) << v;
    return out.str();
}

std::size_t parse_positive(std::string_view text, const char *what) {
    std::size_t value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value == 0) {
        throw InvalidArgument(std::string("bad ") + what + " '" +
                              std::string(text) + "'");
    }
    return value;
}

} // namespace

std::string_view family_name(Family family) {
    for (const auto &[f, name] : kFamilies) {
        if (f == family) {
            return name;
        }
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (const auto &[f, n] : kFamilies) {
        if (n == name) {
            return f;
        }
    }
    throw InvalidArgument("unknown circuit family '" + std::string(name) +
                          "'");
}

Circuit build_circuit(Family family, int n, int blocks) {
    if (n < 2) {
        throw InvalidArgument("benchmark circuits need n >= 2");
    }
    if (blocks < 1) {
        throw InvalidArgument("blocks must be >= 1");
    }
    const auto all = WirePattern::all_qubits();
    CircuitBuilder b(n);
    switch (family) {
    case Family::VQ:
    case Family::QDI:
        b.trainable(GateKind::Ry, all).fixed(GateKind::CNOT,
                                             WirePattern::ring_pairs());
        for (int k = 0; k < blocks; ++k) {
            if (family == Family::QDI || k == 0) {
                b.encoding(GateKind::Rz, all);
            } else {
                b.trainable(GateKind::Rz, all);
            }
            b.trainable(GateKind::Ry, all)
                .fixed(GateKind::CNOT, WirePattern::ring_pairs());
        }
        break;
    case Family::IBM:
        for (int k = 0; k < blocks; ++k) {
            b.encoding(GateKind::Rz, all)
                .fixed(GateKind::Sx, all)
                .trainable(GateKind::Rz, all)
                .fixed(GateKind::X, all)
                .fixed(GateKind::ECR, WirePattern::chain_pairs());
        }
        break;
    case Family::IonQ:
        for (int k = 0; k < blocks; ++k) {
            b.encoding(GateKind::Rz, all)
                .trainable(GateKind::GPI2, all)
                .trainable(GateKind::Rz, all)
                .fixed(GateKind::GPI, all, {kIonqGpiPhase})
                .trainable(GateKind::Rzz, WirePattern::ring_pairs());
        }
        break;
    }
    return b.build();
}

CircuitInputs random_inputs(const Circuit &circuit, std::size_t batch,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                 std::numbers::pi);
    CircuitInputs out;
    out.trainable.resize(circuit.trainable_count);
    for (double &v : out.trainable) {
        v = angle(rng);
    }
    if (circuit.encoding_count > 0) {
        out.encoding = RealMatrix(batch, circuit.encoding_count);
        for (double &v : out.encoding.values) {
            v = angle(rng);
        }
    }
    return out;
}

PhaseTimings time_phases(CircuitRunner &runner, const CircuitInputs &inputs,
                         std::size_t batch, int reps, int warmup, Timer &timer,
                         bool with_backward) {
    if (reps < 1 || warmup < 0) {
        throw InvalidArgument("reps must be >= 1 and warmup >= 0");
    }
    const Circuit &circuit = runner.circuit();
    check_inputs(circuit, inputs.trainable, inputs.encoding, batch);
    const auto params = runner.bind(inputs.trainable, inputs.encoding);
    StateBatch psi(circuit.n, batch);
    StateBatch lambda(with_backward ? circuit.n : 1, with_backward ? batch : 1);
    GradResult grads;
    std::vector<double> fwd, bwd, tot;

    for (int i = 0; i < warmup + reps; ++i) {
        reset_to_zero_state(psi);
        timer.start();
        runner.forward_bound(params, psi.view());
        const double f = timer.stop();
        double g = 0.0;
        if (with_backward) {
            grads.value = expectation_z_sum(psi);
            timer.start();
            backward_sweep(runner, params, psi, lambda, grads);
            g = timer.stop();
        }
        if (i >= warmup) {
            fwd.push_back(f);
            bwd.push_back(g);
            tot.push_back(f + g);
        }
    }
    return {summarize(fwd, warmup), summarize(bwd, warmup),
            summarize(tot, warmup)};
}

double correctness_gap(const Circuit &circuit, const CircuitInputs &inputs,
                       std::size_t batch, const Plan &plan) {
    const StateBatch start = zero_state(circuit.n, batch);
    const StateBatch reference =
        apply_circuit(circuit, inputs.trainable, inputs.encoding, start);
    const StateBatch planned =
        apply_circuit(circuit, inputs.trainable, inputs.encoding, start, &plan);
    double gap = 0.0;
    for (std::size_t i = 0; i < reference.flat().size(); ++i) {
        gap = std::max(gap, std::abs(reference.flat()[i] - planned.flat()[i]));
    }
    return gap;
}

BenchReport run_benchmark(const BenchConfig &config, Timer &timer) {
    if (config.qubits_min < 2 || config.qubits_max < config.qubits_min) {
        throw InvalidArgument("qubit range must satisfy 2 <= A <= B");
    }
    if (config.batches.empty()) {
        throw InvalidArgument("batch list is empty");
    }
    if (config.reps < 1 || config.warmup < 0 || config.blocks < 1) {
        throw InvalidArgument("reps and blocks must be >= 1, warmup >= 0");
    }
    std::optional<Plan> loaded;
    if (config.plan_path) {
        loaded = load_plan(*config.plan_path);
        if (config.qubits_min != loaded->n || config.qubits_max != loaded->n) {
            throw InvalidArgument("plan file targets n = " +
                                  std::to_string(loaded->n) +
                                  "; the qubit range must be exactly that");
        }
    }
    const std::string family(family_name(config.family));
    BenchReport report;
    if (loaded && loaded->machine_id != current_machine_id()) {
        report.warnings.push_back("plan was built on '" + loaded->machine_id +
                                  "'");
    }

    for (int n = config.qubits_min; n <= config.qubits_max; ++n) {
        const Circuit circuit = build_circuit(config.family, n, config.blocks);
        for (std::size_t batch : config.batches) {
            const std::string where = "n=" + std::to_string(n) +
                                      " batch=" + std::to_string(batch);
            if (batch == 0 || dim_of(n) > config.element_budget / batch) {
                report.capacity_errors.push_back(
                    where + ": state exceeds the element budget of " +
                    std::to_string(config.element_budget));
                continue;
            }
            try {
                const std::uint64_t seed =
                    config.seed ^ (static_cast<std::uint64_t>(n) << 32) ^ batch;
                const CircuitInputs inputs = random_inputs(circuit, batch, seed);
                const std::string source = loaded ? "file" : "planned";
                Plan plan = loaded ? *loaded
                                   : build_plan(circuit, batch, timer,
                                                {config.reps, config.warmup,
                                                 config.objective,
                                                 config.seed});
                const double gap = correctness_gap(circuit, inputs, batch, plan);
                if (!(gap <= kCorrectnessTolerance)) {
                    throw CorrectnessError(
                        family + " " + where +
                        ": planned forward deviates from the default path by " +
                        format_double(gap));
                }
                CircuitRunner runner(circuit, &plan);
                const PhaseTimings t = time_phases(
                    runner, inputs, batch, config.reps, config.warmup, timer);
                const std::pair<const char *, const TimingStats *> phases[] = {
                    {"forward", &t.forward},
                    {"backward", &t.backward},
                    {"total", &t.total}};
                for (const auto &[phase, stats] : phases) {
                    report.rows.push_back({family, n, batch, phase, source,
                                           stats->mean_seconds,
                                           stats->std_seconds, stats->reps,
                                           stats->warmup, config.seed});
                }
                std::map<std::string, bool> seen;
                for (std::size_t i = 0; i < circuit.layers.size(); ++i) {
                    const std::string sig = short_signature(circuit.layers[i]);
                    if (seen.emplace(sig, true).second) {
                        report.crossover.push_back(
                            {family, sig, n, batch,
                             std::string(kernel_name(runner.kernels()[i]))});
                    }
                }
            } catch (const CapacityError &e) {
                report.capacity_errors.push_back(where + ": " + e.what());
            }
        }
    }
    auto row_key = [](const BenchRow &r) {
        return std::tie(r.family, r.n, r.batch, r.phase, r.plan_source);
    };
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [&](const BenchRow &a, const BenchRow &b) {
                         return row_key(a) < row_key(b);
                     });
    auto cross_key = [](const CrossoverRow &r) {
        return std::tie(r.family, r.signature, r.n, r.batch);
    };
    std::stable_sort(report.crossover.begin(), report.crossover.end(),
                     [&](const CrossoverRow &a, const CrossoverRow &b) {
                         return cross_key(a) < cross_key(b);
                     });
    return report;
}

void write_bench_csv(const std::vector<BenchRow> &rows, std::ostream &out) {
    out << "family,n,batch,phase,plan_source,mean_s,std_s,reps,warmup,seed\n";
    for (const BenchRow &r : rows) {
        out << r.family << ',' << r.n << ',' << r.batch << ',' << r.phase << ','
            << r.plan_source << ',' << format_double(r.mean_s) << ','
            << format_double(r.std_s) << ',' << r.reps << ',' << r.warmup << ','
            << r.seed << '\n';
    }
}

void write_crossover_csv(const std::vector<CrossoverRow> &rows,
                         std::ostream &out) {
    out << "family,signature,n,batch,kernel\n";
    for (const CrossoverRow &r : rows) {
        out << r.family << ',' << r.signature << ',' << r.n << ',' << r.batch
            << ',' << r.kernel << '\n';
    }
}

std::filesystem::path crossover_path(const std::filesystem::path &out) {
    std::filesystem::path p = out;
    p.replace_extension(".crossover.csv");
    return p;
}

void save_report(const BenchReport &report, const std::filesystem::path &out) {
    std::ofstream main(out);
    if (!main) {
        throw std::runtime_error("cannot write " + out.string());
    }
    write_bench_csv(report.rows, main);
    const auto cross = crossover_path(out);
    std::ofstream side(cross);
    if (!side) {
        throw std::runtime_error("cannot write " + cross.string());
    }
    write_crossover_csv(report.crossover, side);
}

std::vector<KernelSweepRow>
kernel_sweep(GateKind gate, const WirePattern &pattern, ParamRole role,
             int qubits_min, int qubits_max, std::size_t batch, Timer &timer,
             const TimingOptions &options) {
    std::vector<KernelSweepRow> rows;
    const TraitFlags traits = gate_traits(gate);
    Layer layer{gate, pattern, {role, {}, 0}};
    if (role == ParamRole::Fixed && traits.param_count > 0) {
        layer.params.values.assign(static_cast<std::size_t>(traits.param_count),
                                   0.5);
    }
    for (int n = std::max(qubits_min, traits.arity); n <= qubits_max; ++n) {
        for (KernelId k : applicable_kernels(layer, n)) {
            rows.push_back({std::string(gate_name(gate)),
                            std::string(pattern_name(pattern.kind)), n, batch,
                            std::string(kernel_name(k)),
                            time_kernel(k, layer, n, batch, timer, options)});
        }
    }
    return rows;
}

void write_kernel_csv(const std::vector<KernelSweepRow> &rows,
                      std::ostream &out) {
    out << "gate,pattern,n,batch,kernel,mean_s,std_s,reps,warmup\n";
    for (const KernelSweepRow &r : rows) {
        out << r.gate << ',' << r.pattern << ',' << r.n << ',' << r.batch << ','
            << r.kernel << ',' << format_double(r.stats.mean_seconds) << ','
            << format_double(r.stats.std_seconds) << ',' << r.stats.reps << ','
            << r.stats.warmup << '\n';
    }
}

std::pair<int, int> parse_qubit_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto n = static_cast<int>(parse_positive(text, "qubit count"));
        return {n, n};
    }
    const auto lo =
        static_cast<int>(parse_positive(text.substr(0, dots), "qubit range"));
    const auto hi =
        static_cast<int>(parse_positive(text.substr(dots + 2), "qubit range"));
    if (hi < lo) {
        throw InvalidArgument("empty qubit range '" + std::string(text) + "'");
    }
    return {lo, hi};
}

std::vector<std::size_t> parse_batch_list(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_positive(text.substr(start, end - start),
                                     "batch size"));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace layersim
