// Copyright 2026 The Discern Authors
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

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "discern/rules/decide.hpp"
#include "discern/scene/frame.hpp"

namespace discern::cli {

struct EnvironmentRow {
    std::string environment;
    std::size_t frames = 0;
    std::size_t samples = 0;
    double avg_ms = 0.0;
    double max_ms = 0.0;
};

struct ScenarioRow {
    std::string scenario;
    std::string environment;
    /// Mean over repetitions, one entry per frame.
    std::vector<double> frame_ms;
};

struct BenchReport {
    std::vector<EnvironmentRow> environments;
    std::vector<ScenarioRow> scenarios;
    std::size_t frames = 0;
    std::size_t repetitions = 0;
    double avg_ms = 0.0;
    double max_ms = 0.0;
};

inline std::string environment_name(const scene::Scenario& s) {
    auto env = s.environment();
    return env ? std::string(scene::to_string(*env)) : std::string("unspecified");
}

/// Decides every frame of every scenario `reps` times.
inline BenchReport run_bench(const rules::Rulebase& rulebase, std::span<const scene::Scenario> scenarios,
                             std::size_t reps) {
    BenchReport report;
    report.repetitions = reps;
    std::vector<std::string> order;
    for (auto env : scene::Vocabulary<scene::LocationClass>::entries) order.emplace_back(env.second);
    order.emplace_back("unspecified");
    std::vector<EnvironmentRow> rows(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rows[i].environment = order[i];

    double total = 0.0;
    std::size_t samples = 0;
    for (const auto& scenario : scenarios) {
        std::string env = environment_name(scenario);
        auto& row = rows[std::find(order.begin(), order.end(), env) - order.begin()];
        ScenarioRow srow{scenario.name, env, {}};
        for (const auto& frame : scenario.frames) {
            double sum = 0.0;
            for (std::size_t r = 0; r < reps; ++r) {
                double ms = rules::decide(rulebase, scenario, frame.timestamp).latency_ms;
                sum += ms;
                row.avg_ms += ms;
                row.max_ms = std::max(row.max_ms, ms);
                report.max_ms = std::max(report.max_ms, ms);
                ++row.samples;
                total += ms;
                ++samples;
            }
            ++row.frames;
            ++report.frames;
            srow.frame_ms.push_back(reps ? sum / static_cast<double>(reps) : 0.0);
        }
        report.scenarios.push_back(std::move(srow));
    }
    for (auto& row : rows) {
        if (row.samples == 0) continue;
        row.avg_ms /= static_cast<double>(row.samples);
        report.environments.push_back(row);
    }
    report.avg_ms = samples ? total / static_cast<double>(samples) : 0.0;
    return report;
}

inline nlohmann::json bench_json(const BenchReport& r) {
    nlohmann::json envs = nlohmann::json::array();
    for (const auto& e : r.environments) {
        envs.push_back({{"environment", e.environment},
                        {"frames", e.frames},
                        {"samples", e.samples},
                        {"avg_ms", e.avg_ms},
                        {"max_ms", e.max_ms}});
    }
    nlohmann::json scen = nlohmann::json::array();
    for (const auto& s : r.scenarios) {
        scen.push_back({{"scenario", s.scenario}, {"environment", s.environment}, {"frame_ms", s.frame_ms}});
    }
    return {{"environments", envs},
            {"scenarios", scen},
            {"frames", r.frames},
            {"repetitions", r.repetitions},
            {"avg_ms", r.avg_ms},
            {"max_ms", r.max_ms}};
}

inline std::string bench_text(const BenchReport& r) {
    std::string out;
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %8s %12s %12s\n", "environment", "frames", "avg_ms", "max_ms");
    out += line;
    for (const auto& e : r.environments) {
        std::snprintf(line, sizeof line, "%-12s %8zu %12.3f %12.3f\n", e.environment.c_str(), e.frames,
                      e.avg_ms, e.max_ms);
        out += line;
    }
    std::snprintf(line, sizeof line, "%-12s %8zu %12.3f %12.3f\n", "all", r.frames, r.avg_ms, r.max_ms);
    out += line;
    return out;
}

}  // namespace discern::cli
