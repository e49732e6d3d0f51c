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

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "discern/rules/decide.hpp"

namespace discern::cli {

/// One output line of `decide`, `run` and friends.
struct DecisionRecord {
    std::string scenario;
    std::int64_t t = 0;
    std::string action;
    std::vector<std::string> suggested;
    double latency_ms = 0.0;
    std::optional<std::string> justification;

    friend bool operator==(const DecisionRecord&, const DecisionRecord&) = default;
};

inline DecisionRecord make_record(const rules::Decision& d, bool explain) {
    DecisionRecord r;
    r.scenario = d.scenario;
    r.t = d.timestamp;
    r.action = std::string(rules::to_string(d.chosen));
    for (auto a : d.suggested_actions()) r.suggested.emplace_back(rules::to_string(a));
    r.latency_ms = d.latency_ms;
    if (explain) r.justification = rules::render_decision(d);
    return r;
}

inline void to_json(nlohmann::json& j, const DecisionRecord& r) {
    j = nlohmann::json{{"scenario", r.scenario},
                       {"t", r.t},
                       {"action", r.action},
                       {"suggested", r.suggested},
                       {"latency_ms", r.latency_ms}};
    if (r.justification) j["justification"] = *r.justification;
}

inline void from_json(const nlohmann::json& j, DecisionRecord& r) {
    j.at("scenario").get_to(r.scenario);
    j.at("t").get_to(r.t);
    j.at("action").get_to(r.action);
    j.at("suggested").get_to(r.suggested);
    j.at("latency_ms").get_to(r.latency_ms);
    if (auto it = j.find("justification"); it != j.end() && !it->is_null()) {
        r.justification = it->get<std::string>();
    } else {
        r.justification.reset();
    }
}

inline std::string to_json_line(const DecisionRecord& r) { return nlohmann::json(r).dump(); }

inline DecisionRecord parse_json_line(const std::string& line) {
    return nlohmann::json::parse(line).get<DecisionRecord>();
}

/// `scenario t=N action=A suggested=[a,b] latency_ms=X`, then the
/// justification lines if present.
inline std::string to_text(const DecisionRecord& r) {
    std::string s = r.scenario + " t=" + std::to_string(r.t) + " action=" + r.action + " suggested=[";
    for (std::size_t i = 0; i < r.suggested.size(); ++i) {
        if (i) s += ',';
        s += r.suggested[i];
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.latency_ms);
    s += "] latency_ms=";
    s += buf;
    s += '\n';
    if (r.justification) s += *r.justification;
    return s;
}

}  // namespace discern::cli
