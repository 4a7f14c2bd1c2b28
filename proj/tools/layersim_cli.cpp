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
// Command-line front end: bench, plan, run and kernels subcommands.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "layersim/bench.hpp"
#include "layersim/circuit_io.hpp"
#include "layersim/errors.hpp"
#include "layersim/grad.hpp"
#include "layersim/plan.hpp"
#include "layersim/planner.hpp"
#include "layersim/simulator.hpp"

using namespace layersim;

namespace {

enum ExitCode : int {
    kOk = 0,
    kCorrectness = 1,
    kInvalid = 2,
    kCapacity = 3,
};

struct BenchArgs {
    std::string family = "vq";
    std::string qubits = "2..6";
    std::string batch = "1";
    int blocks = 8;
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    std::string objective = "forward";
    std::uint64_t seed = 0;
    std::string out = "results.csv";
    std::string plan;
    std::size_t budget = kDefaultElementBudget;
};

struct PlanArgs {
    std::string family = "vq";
    int qubits = 4;
    std::size_t batch = 1;
    int blocks = 8;
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    std::string objective = "forward";
    std::uint64_t seed = 0;
    std::string out = "plan.json";
};

struct RunArgs {
    std::string circuit;
    std::string params;
    std::string plan;
    std::size_t batch = 1;
    bool gradients = false;
};

struct KernelArgs {
    std::string gate = "Rz";
    std::string pattern = "all";
    std::string role = "trainable";
    std::string qubits = "2..12";
    std::size_t batch = 1;
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    std::string objective = "forward";
    std::string out;
};

int cmd_bench(const BenchArgs &a) {
    BenchConfig cfg;
    cfg.family = parse_family(a.family);
    std::tie(cfg.qubits_min, cfg.qubits_max) = parse_qubit_range(a.qubits);
    cfg.batches = parse_batch_list(a.batch);
    cfg.blocks = a.blocks;
    cfg.reps = a.reps;
    cfg.warmup = a.warmup;
    cfg.objective = parse_objective(a.objective);
    cfg.seed = a.seed;
    cfg.out = a.out;
    cfg.element_budget = a.budget;
    if (!a.plan.empty()) {
        cfg.plan_path = a.plan;
    }
    SteadyTimer timer;
    const BenchReport report = run_benchmark(cfg, timer);
    save_report(report, cfg.out);
    for (const auto &w : report.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    for (const auto &e : report.capacity_errors) {
        std::cerr << "capacity: " << e << '\n';
    }
    std::cout << "wrote " << report.rows.size() << " rows to " << a.out
              << " and " << crossover_path(cfg.out).string() << '\n';
    return report.capacity_errors.empty() ? kOk : kCapacity;
}

int cmd_plan(const PlanArgs &a) {
    const Circuit circuit = build_circuit(parse_family(a.family), a.qubits,
                                          a.blocks);
    SteadyTimer timer;
    const Plan plan = build_plan(
        circuit, a.batch, timer,
        {a.reps, a.warmup, parse_objective(a.objective), a.seed});
    save_plan(plan, a.out);
    for (const Assignment &as : plan.assignments) {
        std::cout << as.layer_index << ' '
                  << gate_name(circuit.layers[as.layer_index].gate) << ' '
                  << kernel_name(as.kernel) << '\n';
    }
    return kOk;
}

int cmd_run(const RunArgs &a) {
    const Circuit circuit = load_circuit(a.circuit);
    CircuitInputs inputs;
    if (!a.params.empty()) {
        inputs = load_inputs(a.params);
    }
    const std::size_t batch =
        circuit.encoding_count > 0 ? inputs.encoding.rows : a.batch;
    std::optional<Plan> plan;
    if (!a.plan.empty()) {
        plan = load_plan(a.plan);
        if (plan->machine_id != current_machine_id()) {
            std::cerr << "warning: plan was built on '" << plan->machine_id
                      << "'\n";
        }
    }
    CircuitRunner runner(circuit, plan ? &*plan : nullptr);
    std::cout << std::setprecision(17);
    if (!a.gradients) {
        StateBatch state = zero_state(circuit.n, batch);
        runner.forward(inputs.trainable, inputs.encoding, state);
        const auto values = expectation_z_sum(state);
        for (std::size_t b = 0; b < values.size(); ++b) {
            std::cout << b << ' ' << values[b] << '\n';
        }
        return kOk;
    }
    const GradResult g =
        gradient(runner, inputs.trainable, inputs.encoding, batch);
    for (std::size_t b = 0; b < g.value.size(); ++b) {
        std::cout << b << ' ' << g.value[b];
        for (double v : g.grads.row(b)) {
            std::cout << ' ' << v;
        }
        if (g.encoding_grads.cols > 0) {
            std::cout << " |";
            for (double v : g.encoding_grads.row(b)) {
                std::cout << ' ' << v;
            }
        }
        std::cout << '\n';
    }
    return kOk;
}

int cmd_kernels(const KernelArgs &a) {
    const auto [lo, hi] = parse_qubit_range(a.qubits);
    SteadyTimer timer;
    TimingOptions opts;
    opts.reps = a.reps;
    opts.warmup = a.warmup;
    opts.objective = parse_objective(a.objective);
    const PatternKind kind = parse_pattern(a.pattern);
    if (kind == PatternKind::Explicit) {
        throw InvalidArgument("kernels sweeps take all, ring or chain");
    }
    const auto rows = kernel_sweep(parse_gate(a.gate), WirePattern{kind, {}},
                                   parse_role(a.role), lo, hi, a.batch, timer,
                                   opts);
    if (a.out.empty()) {
        write_kernel_csv(rows, std::cout);
    } else {
        std::ofstream out(a.out);
        if (!out) {
            throw std::runtime_error("cannot write " + a.out);
        }
        write_kernel_csv(rows, out);
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"layersim: layered state-vector simulator and benchmarks"};
    app.require_subcommand(1);

    BenchArgs bench;
    auto *b = app.add_subcommand("bench", "time forward and backward passes");
    b->add_option("--family", bench.family, "vq, qdi, ibm or ionq")
        ->capture_default_str();
    b->add_option("--qubits", bench.qubits, "qubit range A..B")
        ->capture_default_str();
    b->add_option("--batch", bench.batch, "comma separated batch sizes")
        ->capture_default_str();
    b->add_option("--blocks", bench.blocks)->capture_default_str();
    b->add_option("--reps", bench.reps)->capture_default_str();
    b->add_option("--warmup", bench.warmup)->capture_default_str();
    b->add_option("--objective", bench.objective,
                  "forward or forward+backward")
        ->capture_default_str();
    b->add_option("--seed", bench.seed)->capture_default_str();
    b->add_option("--out", bench.out)->capture_default_str();
    b->add_option("--plan", bench.plan, "replay this plan file");
    b->add_option("--budget", bench.budget, "state element budget")
        ->capture_default_str();

    PlanArgs plan;
    auto *p = app.add_subcommand("plan", "build and save an execution plan");
    p->add_option("--family", plan.family)->capture_default_str();
    p->add_option("--qubits", plan.qubits)->capture_default_str();
    p->add_option("--batch", plan.batch)->capture_default_str();
    p->add_option("--blocks", plan.blocks)->capture_default_str();
    p->add_option("--reps", plan.reps)->capture_default_str();
    p->add_option("--warmup", plan.warmup)->capture_default_str();
    p->add_option("--objective", plan.objective)->capture_default_str();
    p->add_option("--seed", plan.seed)->capture_default_str();
    p->add_option("--out", plan.out)->capture_default_str();

    RunArgs run;
    auto *r = app.add_subcommand("run", "evaluate a circuit file");
    r->add_option("--circuit", run.circuit)->required();
    r->add_option("--params", run.params);
    r->add_option("--plan", run.plan);
    r->add_option("--batch", run.batch,
                  "rows when the circuit has no encoding inputs")
        ->capture_default_str();
    r->add_flag("--gradients", run.gradients, "also print gradients");

    KernelArgs kern;
    auto *k = app.add_subcommand("kernels", "time every kernel of one layer");
    k->add_option("--gate", kern.gate)->capture_default_str();
    k->add_option("--pattern", kern.pattern)->capture_default_str();
    k->add_option("--role", kern.role)->capture_default_str();
    k->add_option("--qubits", kern.qubits)->capture_default_str();
    k->add_option("--batch", kern.batch)->capture_default_str();
    k->add_option("--reps", kern.reps)->capture_default_str();
    k->add_option("--warmup", kern.warmup)->capture_default_str();
    k->add_option("--objective", kern.objective)->capture_default_str();
    k->add_option("--out", kern.out, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kInvalid;
    }

    try {
        if (b->parsed()) {
            return cmd_bench(bench);
        }
        if (p->parsed()) {
            return cmd_plan(plan);
        }
        if (r->parsed()) {
            return cmd_run(run);
        }
        return cmd_kernels(kern);
    } catch (const CorrectnessError &e) {
        std::cerr << "correctness gate failed: " << e.what() << '\n';
        return kCorrectness;
    } catch (const CapacityError &e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
}
