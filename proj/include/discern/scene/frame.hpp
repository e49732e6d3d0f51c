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

#include <optional>
#include <string>
#include <vector>

#include "discern/logic/term.hpp"
#include "discern/scene/geometry.hpp"
#include "discern/scene/vocabulary.hpp"

namespace discern::scene {

/// Opaque lane identifier (integer or symbol); `offroad` is the sentinel
/// for objects outside every lane.
using LaneId = logic::Term;

inline LaneId offroad_lane() { return logic::Term::symbol("offroad"); }
inline bool is_offroad(const LaneId& lane) { return lane.is_symbol() && lane.name() == "offroad"; }

struct ObjectObs {
    std::string id;
    ObjectClass cls = ObjectClass::car;
    LaneId lane;
    double distance_ahead = 0.0;  // signed, positive ahead of ego
    double rel_speed = 0.0;       // signed, positive receding
    std::optional<Path> pred_path;
};

struct Intersection {
    IntersectionKind kind = IntersectionKind::four_way;
    Signaling signaling = Signaling::signalized;
    IntersectionPosition position = IntersectionPosition::approaching;
};

struct TrafficSign {
    SignKind kind = SignKind::stop;
    double value = 0.0;  // speed_limit only

    friend bool operator==(const TrafficSign&, const TrafficSign&) = default;
};

struct SensorReading {
    SensorSide side = SensorSide::front;
    double distance = 0.0;
};

/// One timestamped scene observation.
struct Frame {
    std::int64_t timestamp = 0;
    double ego_speed = 0.0;
    LaneId ego_lane;
    std::vector<LaneId> lanes;  // leftmost first
    std::optional<double> posted_speed_limit;
    std::optional<LocationClass> location;
    std::vector<ObjectObs> objects;
    TrafficLight traffic_light = TrafficLight::none;
    std::vector<TrafficSign> traffic_signs;
    std::optional<Intersection> intersection;
    std::optional<std::int64_t> arrival_rank;  // 1 = earliest
    std::vector<SensorReading> sensors;
    std::optional<Path> ego_pred_path;
    Intent intent = Intent::continue_in_lane;
};

struct Scenario {
    std::string name;
    std::vector<Frame> frames;
    BrakingModel braking;

    const Frame* frame_at(std::int64_t t) const {
        for (const auto& f : frames) {
            if (f.timestamp == t) return &f;
        }
        return nullptr;
    }

    /// Environment class used to group scenarios in latency reports.
    std::optional<LocationClass> environment() const {
        for (const auto& f : frames) {
            if (f.location) return f.location;
        }
        return std::nullopt;
    }
};

/// Scenario-file and frame-compilation failures; line is 0 when unknown.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace discern::scene
