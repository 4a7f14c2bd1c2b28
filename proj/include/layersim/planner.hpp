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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "layersim/circuit.hpp"
#include "layersim/kernel_id.hpp"
#include "layersim/plan.hpp"
#include "layersim/state.hpp"

namespace layersim {

inline constexpr int kDefaultReps = 10;
inline constexpr int kDefaultWarmup = 3;

/// Interval clock. stop() returns the seconds since the matching start().
class Timer {
  public:
    virtual ~Timer() = default;
    virtual void start() = 0;
    virtual double stop() = 0;
};

class SteadyTimer final : public Timer {
  public:
    void start() override { begin_ = std::chrono::steady_clock::now(); }
    double stop() override {
        const auto end = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(end - begin_).count();
    }

  private:
    std::chrono::steady_clock::time_point begin_{};
};

/// Replays a fixed list of durations, cycling when exhausted.
class FakeTimer final : public Timer {
  public:
    explicit FakeTimer(std::vector<double> durations);

    void start() override;
    double stop() override;

    [[nodiscard]] std::size_t intervals() const { return intervals_; }

  private:
    std::vector<double> durations_;
    std::size_t intervals_ = 0;
};

struct TimingOptions {
    int reps = kDefaultReps;
    int warmup = kDefaultWarmup;
    Objective objective = Objective::ForwardOnly;
    std::uint64_t seed = 0;
};

/// Fills every row with a normalized complex Gaussian vector.
void fill_random_state(BatchView state, std::mt19937_64 &rng);

TimingStats time_kernel(KernelId kernel, const Layer &layer, int n,
                        std::size_t batch, Timer &timer,
                        const TimingOptions &options = {});

/// Mean population statistics over `samples`.
TimingStats summarize(const std::vector<double> &samples, int warmup);

std::string layer_signature(const Layer &layer, int n, std::size_t batch);

using MeasureFn = std::function<TimingStats(KernelId, const Layer &, int n,
                                            std::size_t batch)>;

/// Argmin plan from an arbitrary measurement source.
Plan build_plan(const Circuit &circuit, std::size_t batch, Objective objective,
                const MeasureFn &measure);

Plan build_plan(const Circuit &circuit, std::size_t batch, Timer &timer,
                const TimingOptions &options = {});

} // namespace layersim
