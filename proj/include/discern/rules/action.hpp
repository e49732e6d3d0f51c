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
#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "discern/scene/vocabulary.hpp"

namespace discern::rules {

enum class Action {
    accelerate,
    brake,
    cruise,
    change_lane_left,
    change_lane_right,
    turn_left,
    turn_right,
};

inline constexpr std::array<Action, 7> kAllActions = {
    Action::accelerate,       Action::brake,     Action::cruise,    Action::change_lane_left,
    Action::change_lane_right, Action::turn_left, Action::turn_right,
};

constexpr std::string_view to_string(Action a) {
    switch (a) {
        case Action::accelerate: return "accelerate";
        case Action::brake: return "brake";
        case Action::cruise: return "cruise";
        case Action::change_lane_left: return "change_lane_left";
        case Action::change_lane_right: return "change_lane_right";
        case Action::turn_left: return "turn_left";
        case Action::turn_right: return "turn_right";
    }
    return "?";
}

constexpr std::optional<Action> action_from_string(std::string_view name) {
    for (Action a : kAllActions) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

/// Higher wins. The two turns share a rank; intent breaks the tie.
constexpr int priority(Action a) {
    switch (a) {
        case Action::turn_left:
        case Action::turn_right: return 6;
        case Action::change_lane_left: return 5;
        case Action::change_lane_right: return 4;
        case Action::brake: return 3;
        case Action::accelerate: return 2;
        case Action::cruise: return 1;
    }
    return 0;
}

/// Highest-priority suggested action; cruise when nothing is suggested.
inline Action arbitrate(std::span<const Action> suggested, scene::Intent intent) {
    if (suggested.empty()) return Action::cruise;
    auto has = [&](Action a) { return std::find(suggested.begin(), suggested.end(), a) != suggested.end(); };
    if (has(Action::turn_left) && has(Action::turn_right)) {
        return intent == scene::Intent::enter_left_lane ? Action::turn_left : Action::turn_right;
    }
    return *std::max_element(suggested.begin(), suggested.end(),
                             [](Action a, Action b) { return priority(a) < priority(b); });
}

}  // namespace discern::rules
