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
#include "layersim/plan.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "layersim/errors.hpp"

namespace layersim {
namespace {

using nlohmann::json;

const json &require(const json &obj, const std::string &field,
                    const std::string &where) {
    if (!obj.is_object() || !obj.contains(field)) {
        throw ParseError("plan: missing field '" + where + field + "'");
    }
    return obj.at(field);
}

std::string require_string(const json &obj, const std::string &field,
                           const std::string &where) {
    const json &v = require(obj, field, where);
    if (!v.is_string()) {
        throw ParseError("plan: field '" + where + field +
                         "' must be a string");
    }
    return v.get<std::string>();
}

long long require_int(const json &obj, const std::string &field,
                      const std::string &where) {
    const json &v = require(obj, field, where);
    if (!v.is_number_integer()) {
        throw ParseError("plan: field '" + where + field +
                         "' must be an integer");
    }
    return v.get<long long>();
}

double require_number(const json &obj, const std::string &field,
                      const std::string &where) {
    const json &v = require(obj, field, where);
    if (!v.is_number()) {
        throw ParseError("plan: field '" + where + field +
                         "' must be a number");
    }
    return v.get<double>();
}

KernelId require_kernel(const json &obj, const std::string &where) {
    const std::string name = require_string(obj, "kernel", where);
    try {
        return parse_kernel(name);
    } catch (const InvalidArgument &e) {
        throw ParseError("plan: field '" + where + "kernel': " + e.what());
    }
}

std::size_t require_index(const json &obj, const std::string &where) {
    const long long v = require_int(obj, "layer_index", where);
    if (v < 0) {
        throw ParseError("plan: field '" + where +
                         "layer_index' must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

} // namespace

std::string_view objective_name(Objective objective) {
    return objective == Objective::ForwardOnly ? "forward" : "forward+backward";
}

Objective parse_objective(std::string_view name) {
    if (name == "forward") {
        return Objective::ForwardOnly;
    }
    if (name == "forward+backward") {
        return Objective::ForwardPlusBackward;
    }
    throw InvalidArgument("unknown objective '" + std::string(name) + "'");
}

std::vector<KernelId> Plan::kernels(std::size_t layer_count) const {
    std::vector<KernelId> out(layer_count);
    std::vector<bool> seen(layer_count, false);
    for (const Assignment &a : assignments) {
        if (a.layer_index >= layer_count) {
            throw PlanMismatch("plan assigns layer " +
                               std::to_string(a.layer_index) +
                               " but the circuit has " +
                               std::to_string(layer_count) + " layers");
        }
        if (seen[a.layer_index]) {
            throw PlanMismatch("plan assigns layer " +
                               std::to_string(a.layer_index) + " twice");
        }
        seen[a.layer_index] = true;
        out[a.layer_index] = a.kernel;
    }
    for (std::size_t i = 0; i < layer_count; ++i) {
        if (!seen[i]) {
            throw PlanMismatch("plan has no assignment for layer " +
                               std::to_string(i));
        }
    }
    return out;
}

std::string serialize_plan(const Plan &plan) {
    json doc;
    doc["machine_id"] = plan.machine_id;
    doc["n"] = plan.n;
    doc["batch"] = plan.batch;
    doc["objective"] = std::string(objective_name(plan.objective));
    doc["assignments"] = json::array();
    for (const Assignment &a : plan.assignments) {
        doc["assignments"].push_back(
            {{"layer_index", a.layer_index},
             {"kernel", std::string(kernel_name(a.kernel))}});
    }
    doc["measurements"] = json::array();
    for (const Measurement &m : plan.measurements) {
        doc["measurements"].push_back(
            {{"layer_index", m.layer_index},
             {"kernel", std::string(kernel_name(m.kernel))},
             {"mean_s", m.mean_s},
             {"std_s", m.std_s},
             {"reps", m.reps}});
    }
    return doc.dump(2) + "\n";
}

Plan parse_plan(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("plan: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("plan: document must be an object");
    }
    Plan plan;
    plan.machine_id = require_string(doc, "machine_id", "");
    plan.n = static_cast<int>(require_int(doc, "n", ""));
    const long long batch = require_int(doc, "batch", "");
    if (plan.n < 1 || batch < 1) {
        throw ParseError("plan: fields 'n' and 'batch' must be positive");
    }
    plan.batch = static_cast<std::size_t>(batch);
    try {
        plan.objective = parse_objective(require_string(doc, "objective", ""));
    } catch (const InvalidArgument &e) {
        throw ParseError(std::string("plan: field 'objective': ") + e.what());
    }
    const json &assignments = require(doc, "assignments", "");
    if (!assignments.is_array()) {
        throw ParseError("plan: field 'assignments' must be an array");
    }
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        const std::string where = "assignments[" + std::to_string(i) + "].";
        plan.assignments.push_back(
            {require_index(assignments[i], where),
             require_kernel(assignments[i], where)});
    }
    const json &measurements = require(doc, "measurements", "");
    if (!measurements.is_array()) {
        throw ParseError("plan: field 'measurements' must be an array");
    }
    for (std::size_t i = 0; i < measurements.size(); ++i) {
        const std::string where = "measurements[" + std::to_string(i) + "].";
        const json &m = measurements[i];
        plan.measurements.push_back(
            {require_index(m, where), require_kernel(m, where),
             require_number(m, "mean_s", where),
             require_number(m, "std_s", where),
             static_cast<int>(require_int(m, "reps", where))});
    }
    return plan;
}

void save_plan(const Plan &plan, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write plan file " + path.string());
    }
    out << serialize_plan(plan);
}

Plan load_plan(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read plan file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_plan(buf.str());
}

Plan plan_roundtrip(const Plan &plan) { return parse_plan(serialize_plan(plan)); }

std::string current_machine_id() {
    char host[256] = {};
    if (gethostname(host, sizeof(host) - 1) != 0) {
        host[0] = '\0';
    }
    std::string cpu = "unknown-cpu";
    std::ifstream info("/proc/cpuinfo");
    for (std::string line; std::getline(info, line);) {
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                cpu = line.substr(line.find_first_not_of(' ', colon + 1));
            }
            break;
        }
    }
    return std::string(host) + " / " + cpu;
}

} // namespace layersim
