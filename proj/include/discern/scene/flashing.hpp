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

#include <span>

#include "discern/scene/vocabulary.hpp"

namespace discern::scene {

inline constexpr std::size_t kFlashWindow = 8;
inline constexpr std::size_t kFlashMinChanges = 4;

/// True when the trailing window (oldest first) alternates between red and
/// dark at least four times. Other transitions do not count, so a single
/// occlusion blip or a normal red→green cycle never reads as flashing.
inline bool detect_flashing(std::span<const TrafficLight> history) {
    if (history.size() > kFlashWindow) history = history.subspan(history.size() - kFlashWindow);
    std::size_t changes = 0;
    for (std::size_t i = 1; i < history.size(); ++i) {
        auto a = history[i - 1];
        auto b = history[i];
        if ((a == TrafficLight::red && b == TrafficLight::none) ||
            (a == TrafficLight::none && b == TrafficLight::red)) {
            ++changes;
        }
    }
    return changes >= kFlashMinChanges;
}

}  // namespace discern::scene
