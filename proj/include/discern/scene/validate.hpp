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
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "discern/scene/frame.hpp"

namespace discern::scene {

namespace detail {

inline std::string lane_list(const std::vector<LaneId>& lanes) {
    std::string s = "[";
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        if (i) s += ',';
        s += lanes[i].str();
    }
    return s + "]";
}

inline std::string number_text(double v) {
    return logic::Term::number(v).str();
}

inline void check_path(const Path& path, const std::string& owner, std::vector<std::string>& out) {
    if (path.points.size() < 2) {
        out.push_back(owner + " path needs at least 2 points");
    }
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const auto& p = path.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            out.push_back(owner + " path has a non-finite point");
        }
        if (i > 0 && p == path.points[i - 1]) {
            out.push_back(owner + " path repeats point (" + number_text(p.x) + "," +
                          number_text(p.y) + ")");
        }
    }
}

}  // namespace detail

/// Every Frame invariant violation, in a fixed order. Empty means valid.
inline std::vector<std::string> validate_frame(const Frame& f) {
    std::vector<std::string> out;
    auto in_lanes = [&](const LaneId& l) {
        return std::find(f.lanes.begin(), f.lanes.end(), l) != f.lanes.end();
    };

    if (f.timestamp < 0) out.push_back("negative timestamp " + std::to_string(f.timestamp));
    if (f.lanes.empty()) out.push_back("no lanes declared");
    for (std::size_t i = 0; i < f.lanes.size(); ++i) {
        if (!f.lanes[i].is_number() && !f.lanes[i].is_symbol()) {
            out.push_back("lane id " + f.lanes[i].str() + " must be a number or symbol");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (f.lanes[i] == f.lanes[j]) out.push_back("duplicate lane id " + f.lanes[i].str());
        }
    }
    if (!in_lanes(f.ego_lane)) {
        out.push_back("ego lane " + f.ego_lane.str() + " not in declared lanes " +
                      detail::lane_list(f.lanes));
    }
    if (!(f.ego_speed >= 0.0) || !std::isfinite(f.ego_speed)) {
        out.push_back("ego speed " + detail::number_text(f.ego_speed) + " must be non-negative");
    }
    if (f.posted_speed_limit && !(*f.posted_speed_limit >= 0.0)) {
        out.push_back("speed limit " + detail::number_text(*f.posted_speed_limit) +
                      " must be non-negative");
    }

    std::set<std::string> ids;
    for (const auto& o : f.objects) {
        if (!ids.insert(o.id).second) out.push_back("duplicate object id " + o.id);
        if (!is_offroad(o.lane) && !in_lanes(o.lane)) {
            out.push_back("object " + o.id + " lane " + o.lane.str() + " not in declared lanes " +
                          detail::lane_list(f.lanes));
        }
        if (!std::isfinite(o.distance_ahead) || !std::isfinite(o.rel_speed)) {
            out.push_back("object " + o.id + " has a non-finite distance or speed");
        }
        if (o.pred_path) detail::check_path(*o.pred_path, "object " + o.id, out);
    }
    for (const auto& s : f.traffic_signs) {
        if (s.kind == SignKind::speed_limit && !(s.value >= 0.0)) {
            out.push_back("speed limit sign value must be non-negative");
        }
    }
    for (const auto& s : f.sensors) {
        if (!(s.distance >= 0.0)) {
            out.push_back(std::string("sensor ") + std::string(to_string(s.side)) + " distance " +
                          detail::number_text(s.distance) + " must be non-negative");
        }
    }
    if (f.arrival_rank) {
        if (!f.intersection || f.intersection->signaling != Signaling::unsignalized) {
            out.push_back("arrival rank given without an unsignalized intersection");
        }
        if (*f.arrival_rank < 1) {
            out.push_back("arrival rank " + std::to_string(*f.arrival_rank) + " must be >= 1");
        }
    }
    if (f.ego_pred_path) detail::check_path(*f.ego_pred_path, "ego", out);
    return out;
}

}  // namespace discern::scene
