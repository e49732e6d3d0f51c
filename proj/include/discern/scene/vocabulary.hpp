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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace discern::scene {

enum class Intent {
    continue_in_lane,
    stay_in_leftmost_lane,
    merge_into_left_lane,
    merge_into_right_lane,
    enter_right_lane,
    enter_left_lane,
    stop_at_destination,
};

enum class ObjectClass {
    car,
    truck,
    bus,
    pedestrian,
    cyclist,
    bicycle,
    bike,
    motorcycle,
    traffic_cone,
    debris,
    animal,
    barrier,
};

enum class TrafficLight { none, red, yellow, green };

enum class LocationClass { city, road, residential, campus };

enum class IntersectionKind { four_way, t_junction_major, t_junction_minor };

enum class Signaling { signalized, unsignalized };

enum class IntersectionPosition { approaching, at };

enum class SensorSide { left, right, front, rear };

enum class SignKind { stop, yield, merge, speed_limit };

template <typename E>
struct Vocabulary;

#define DISCERN_VOCAB(E, ...)                                                   \
    template <>                                                                 \
    struct Vocabulary<E> {                                                      \
        static constexpr std::string_view kind_name = #E;                       \
        static constexpr auto entries = std::to_array<std::pair<E, std::string_view>>({__VA_ARGS__}); \
    };

DISCERN_VOCAB(Intent, {Intent::continue_in_lane, "continue_in_lane"},
              {Intent::stay_in_leftmost_lane, "stay_in_leftmost_lane"},
              {Intent::merge_into_left_lane, "merge_into_left_lane"},
              {Intent::merge_into_right_lane, "merge_into_right_lane"},
              {Intent::enter_right_lane, "enter_right_lane"},
              {Intent::enter_left_lane, "enter_left_lane"},
              {Intent::stop_at_destination, "stop_at_destination"})

DISCERN_VOCAB(ObjectClass, {ObjectClass::car, "car"}, {ObjectClass::truck, "truck"},
              {ObjectClass::bus, "bus"}, {ObjectClass::pedestrian, "pedestrian"},
              {ObjectClass::cyclist, "cyclist"}, {ObjectClass::bicycle, "bicycle"},
              {ObjectClass::bike, "bike"}, {ObjectClass::motorcycle, "motorcycle"},
              {ObjectClass::traffic_cone, "traffic_cone"}, {ObjectClass::debris, "debris"},
              {ObjectClass::animal, "animal"}, {ObjectClass::barrier, "barrier"})

DISCERN_VOCAB(TrafficLight, {TrafficLight::none, "none"}, {TrafficLight::red, "red"},
              {TrafficLight::yellow, "yellow"}, {TrafficLight::green, "green"})

DISCERN_VOCAB(LocationClass, {LocationClass::city, "city"}, {LocationClass::road, "road"},
              {LocationClass::residential, "residential"}, {LocationClass::campus, "campus"})

DISCERN_VOCAB(IntersectionKind, {IntersectionKind::four_way, "four_way"},
              {IntersectionKind::t_junction_major, "t_junction_major"},
              {IntersectionKind::t_junction_minor, "t_junction_minor"})

DISCERN_VOCAB(Signaling, {Signaling::signalized, "signalized"},
              {Signaling::unsignalized, "unsignalized"})

DISCERN_VOCAB(IntersectionPosition, {IntersectionPosition::approaching, "approaching"},
              {IntersectionPosition::at, "at"})

DISCERN_VOCAB(SensorSide, {SensorSide::left, "left"}, {SensorSide::right, "right"},
              {SensorSide::front, "front"}, {SensorSide::rear, "rear"})

DISCERN_VOCAB(SignKind, {SignKind::stop, "stop"}, {SignKind::yield, "yield"},
              {SignKind::merge, "merge"}, {SignKind::speed_limit, "speed_limit"})

#undef DISCERN_VOCAB

template <typename E>
constexpr std::string_view to_string(E value) {
    for (const auto& [v, name] : Vocabulary<E>::entries) {
        if (v == value) return name;
    }
    return "?";
}

template <typename E>
constexpr std::optional<E> from_string(std::string_view name) {
    for (const auto& [v, n] : Vocabulary<E>::entries) {
        if (n == name) return v;
    }
    return std::nullopt;
}

/// Classes that count as road users for the safety properties.
constexpr bool is_road_user(ObjectClass c) {
    switch (c) {
        case ObjectClass::car:
        case ObjectClass::truck:
        case ObjectClass::bus:
        case ObjectClass::pedestrian:
        case ObjectClass::cyclist:
        case ObjectClass::bicycle:
        case ObjectClass::bike:
        case ObjectClass::motorcycle:
            return true;
        default:
            return false;
    }
}

}  // namespace discern::scene
