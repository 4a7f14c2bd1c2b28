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
#include "layersim/planner.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "layersim/errors.hpp"
#include "layersim/executor.hpp"
#include "layersim/grad.hpp"
#include "layersim/workspace.hpp"

namespace layersim {
namespace {

LayerParams random_params(const Layer &layer, int n, std::size_t batch,
                          std::mt19937_64 &rng) {
    LayerParams out;
    out.width = param_width(layer, n);
    if (layer.params.role == ParamRole::Fixed) {
        return bind_params(layer, n, {}, RealMatrix{});
    }
    std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                 std::numbers::pi);
    out.rows = layer.params.role == ParamRole::Encoding ? batch : 1;
    out.values.resize(out.rows * out.width);
    for (double &v : out.values) {
        v = angle(rng);
    }
    return out;
}

} // namespace

FakeTimer::FakeTimer(std::vector<double> durations)
    : durations_(std::move(durations)) {
    if (durations_.empty()) {
        throw InvalidArgument("fake timer needs at least one duration");
    }
}

void FakeTimer::start() {}

double FakeTimer::stop() {
    const double d = durations_[intervals_ % durations_.size()];
    ++intervals_;
    return d;
}

void fill_random_state(BatchView state, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    for (std::size_t b = 0; b < state.rows; ++b) {
        auto row = state.row(b);
        double norm2 = 0.0;
        for (Complex &a : row) {
            a = {normal(rng), normal(rng)};
            norm2 += std::norm(a);
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (Complex &a : row) {
            a *= scale;
        }
    }
}

TimingStats summarize(const std::vector<double> &samples, int warmup) {
    TimingStats stats;
    stats.reps = static_cast<int>(samples.size());
    stats.warmup = warmup;
    if (samples.empty()) {
        return stats;
    }
    double sum = 0.0;
    for (double s : samples) {
        sum += s;
    }
    stats.mean_seconds = sum / static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples) {
        var += (s - stats.mean_seconds) * (s - stats.mean_seconds);
    }
    stats.std_seconds = std::sqrt(var / static_cast<double>(samples.size()));
    return stats;
}

TimingStats time_kernel(KernelId kernel, const Layer &layer, int n,
                        std::size_t batch, Timer &timer,
                        const TimingOptions &options) {
    if (options.reps < 1 || options.warmup < 0) {
        throw InvalidArgument("reps must be >= 1 and warmup >= 0");
    }
    if (!is_applicable(kernel, layer, n)) {
        throw PlanMismatch("kernel " + std::string(kernel_name(kernel)) +
                           " is not applicable to a " +
                           std::string(gate_name(layer.gate)) + " layer");
    }
    const bool backward = options.objective == Objective::ForwardPlusBackward;
    std::mt19937_64 rng(options.seed);
    Workspace ws;
    StateBatch psi(n, batch);
    StateBatch lambda(backward ? n : 1, backward ? batch : 1);
    const LayerParams params = random_params(layer, n, batch, rng);
    std::vector<double> grads(
        backward && layer.params.role != ParamRole::Fixed
            ? batch * params.width
            : 0);

    auto run_once = [&] {
        apply_layer(layer, n, kernel, params, psi.view(), ws);
        if (backward) {
            backward_layer(layer, n, kernel, params, psi.view(),
                           lambda.view(), ws, grads);
        }
    };
    auto prepare = [&] {
        fill_random_state(psi.view(), rng);
        if (backward) {
            fill_random_state(lambda.view(), rng);
        }
    };

    for (int i = 0; i < options.warmup; ++i) {
        prepare();
        run_once();
    }
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(options.reps));
    for (int i = 0; i < options.reps; ++i) {
        prepare();
        timer.start();
        run_once();
        samples.push_back(timer.stop());
    }
    return summarize(samples, options.warmup);
}

std::string layer_signature(const Layer &layer, int n, std::size_t batch) {
    std::ostringstream key;
    key << gate_name(layer.gate) << '|' << pattern_name(layer.pattern.kind)
        << '|' << n << '|' << batch << '|' << role_name(layer.params.role);
    if (layer.pattern.kind == PatternKind::Explicit) {
        key << '|';
        for (const WireTuple &t : layer.pattern.tuples) {
            key << '(';
            for (int w : t) {
                key << w << ',';
            }
            key << ')';
        }
    }
    return key.str();
}

Plan build_plan(const Circuit &circuit, std::size_t batch, Objective objective,
                const MeasureFn &measure) {
    circuit.validate();
    Plan plan;
    plan.machine_id = current_machine_id();
    plan.n = circuit.n;
    plan.batch = batch;
    plan.objective = objective;

    struct Entry {
        KernelId best;
        std::vector<std::pair<KernelId, TimingStats>> table;
    };
    std::map<std::string, Entry> done;
    for (std::size_t i = 0; i < circuit.layers.size(); ++i) {
        const Layer &layer = circuit.layers[i];
        const std::string sig = layer_signature(layer, circuit.n, batch);
        auto it = done.find(sig);
        if (it == done.end()) {
            Entry entry{};
            bool first = true;
            double best_mean = 0.0;
            // kAllKernels is in tie-break order, so a strict comparison
            // keeps the earliest kernel among equal means.
            for (KernelId k : applicable_kernels(layer, circuit.n)) {
                const TimingStats stats = measure(k, layer, circuit.n, batch);
                entry.table.emplace_back(k, stats);
                if (first || stats.mean_seconds < best_mean) {
                    entry.best = k;
                    best_mean = stats.mean_seconds;
                    first = false;
                }
            }
            it = done.emplace(sig, std::move(entry)).first;
        }
        plan.assignments.push_back({i, it->second.best});
        for (const auto &[k, stats] : it->second.table) {
            plan.measurements.push_back(
                {i, k, stats.mean_seconds, stats.std_seconds, stats.reps});
        }
    }
    return plan;
}

Plan build_plan(const Circuit &circuit, std::size_t batch, Timer &timer,
                const TimingOptions &options) {
    return build_plan(
        circuit, batch, options.objective,
        [&](KernelId k, const Layer &layer, int n, std::size_t b) {
            return time_kernel(k, layer, n, b, timer, options);
        });
}

} // namespace layersim
