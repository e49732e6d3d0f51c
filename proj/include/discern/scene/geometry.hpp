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

#include <cmath>
#include <stdexcept>
#include <vector>

namespace discern::scene {

/// Ego-centred coordinates in meters: x lateral, y longitudinal.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Predicted trajectory as a polyline of at least two distinct points.
struct Path {
    std::vector<Point> points;

    friend bool operator==(const Path&, const Path&) = default;
};

namespace detail {

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int orientation(const Point& o, const Point& a, const Point& b) {
    double c = cross(o, a, b);
    return (c > 0) - (c < 0);
}

// p is collinear with segment ab; true if it lies within its bounding box.
inline bool within_box(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

}  // namespace detail

/// Closed-segment test: proper crossings, touching endpoints and collinear
/// overlaps all count.
inline bool segments_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    int o1 = detail::orientation(a1, a2, b1);
    int o2 = detail::orientation(a1, a2, b2);
    int o3 = detail::orientation(b1, b2, a1);
    int o4 = detail::orientation(b1, b2, a2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && detail::within_box(a1, a2, b1)) return true;
    if (o2 == 0 && detail::within_box(a1, a2, b2)) return true;
    if (o3 == 0 && detail::within_box(b1, b2, a1)) return true;
    if (o4 == 0 && detail::within_box(b1, b2, a2)) return true;
    return false;
}

/// True iff some segment of `a` meets some segment of `b`.
inline bool path_intersects(const Path& a, const Path& b) {
    for (std::size_t i = 0; i + 1 < a.points.size(); ++i) {
        for (std::size_t j = 0; j + 1 < b.points.size(); ++j) {
            if (segments_intersect(a.points[i], a.points[i + 1], b.points[j], b.points[j + 1])) {
                return true;
            }
        }
    }
    return false;
}

/// Reaction-time travel plus kinematic braking distance.
struct BrakingModel {
    double reaction_time = 1.0;  // s
    double deceleration = 6.0;   // m/s^2
};

/// Meters needed to stop from `speed` m/s.
inline double stopping_distance(double speed, const BrakingModel& model = {}) {
    if (!(speed >= 0.0)) throw std::invalid_argument("stopping_distance: negative speed");
    return speed * model.reaction_time + speed * speed / (2.0 * model.deceleration);
}

}  // namespace discern::scene
