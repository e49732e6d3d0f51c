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

#include <set>
#include <vector>

#include "discern/logic/builtins.hpp"
#include "discern/logic/program.hpp"
#include "discern/scene/flashing.hpp"
#include "discern/scene/frame.hpp"
#include "discern/scene/terms.hpp"

namespace discern::scene {

/// Every predicate compile_frame can emit.
inline const std::set<logic::PredicateId>& fact_schema() {
    static const std::set<logic::PredicateId> schema = {
        {"self_speed", 2},   {"self_lane", 2},    {"lanes", 2},          {"speed_limit", 2},
        {"location", 2},     {"obj", 2},          {"class", 3},          {"obj_lane", 3},
        {"obj_distance", 3}, {"obj_rel_speed", 3}, {"obj_pred_path", 3}, {"self_pred_path", 2},
        {"traffic_light", 2}, {"traffic_sign", 2}, {"intersection", 4},  {"arrival_rank", 2},
        {"sensor", 3},       {"intent", 2},
    };
    return schema;
}

/// Ground facts for the frame at timestamp `t`, in a fixed order. Each fact
/// carries `t` as its last argument.
inline std::vector<logic::Term> compile_frame(const Scenario& scenario, std::int64_t t) {
    using logic::Term;
    std::size_t pos = scenario.frames.size();
    for (std::size_t i = 0; i < scenario.frames.size(); ++i) {
        if (scenario.frames[i].timestamp == t) pos = i;
    }
    if (pos == scenario.frames.size()) {
        throw ScenarioError(0, "scenario " + scenario.name + " has no frame " + std::to_string(t));
    }
    const Frame& f = scenario.frames[pos];
    const Term ts = Term::integer(t);
    std::vector<Term> out;
    auto emit = [&](const char* name, std::vector<Term> args) {
        args.push_back(ts);
        out.push_back(Term::compound(name, std::move(args)));
    };
    auto sym = [](std::string_view s) { return Term::symbol(std::string(s)); };

    emit("self_speed", {Term::number(f.ego_speed)});
    emit("self_lane", {f.ego_lane});
    emit("lanes", {Term::sequence(f.lanes)});
    if (f.posted_speed_limit) emit("speed_limit", {Term::number(*f.posted_speed_limit)});
    if (f.location) emit("location", {sym(to_string(*f.location))});
    for (const auto& o : f.objects) {
        Term id = sym(o.id);
        emit("obj", {id});
        emit("class", {id, sym(to_string(o.cls))});
        emit("obj_lane", {id, o.lane});
        emit("obj_distance", {id, Term::number(o.distance_ahead)});
        emit("obj_rel_speed", {id, Term::number(o.rel_speed)});
        if (o.pred_path) emit("obj_pred_path", {id, path_to_term(*o.pred_path)});
    }
    if (f.ego_pred_path) emit("self_pred_path", {path_to_term(*f.ego_pred_path)});

    emit("traffic_light", {sym(to_string(f.traffic_light))});
    std::size_t first = pos + 1 > kFlashWindow ? pos + 1 - kFlashWindow : 0;
    std::vector<TrafficLight> history;
    for (std::size_t i = first; i <= pos; ++i) history.push_back(scenario.frames[i].traffic_light);
    if (detect_flashing(history)) emit("traffic_light", {sym("flashing_red")});

    for (const auto& s : f.traffic_signs) {
        if (s.kind == SignKind::speed_limit) {
            emit("traffic_sign", {Term::compound("speed_limit", {Term::number(s.value)})});
        } else {
            emit("traffic_sign", {sym(to_string(s.kind))});
        }
    }
    if (f.intersection) {
        emit("intersection", {sym(to_string(f.intersection->kind)), sym(to_string(f.intersection->signaling)),
                              sym(to_string(f.intersection->position))});
    }
    if (f.arrival_rank) emit("arrival_rank", {Term::integer(*f.arrival_rank)});
    for (const auto& s : f.sensors) emit("sensor", {sym(to_string(s.side)), Term::number(s.distance)});
    emit("intent", {sym(to_string(f.intent))});
    return out;
}

/// Registers `path_intersects/2` and `stopping_distance/2` on a program.
inline void register_scene_builtins(logic::Program& program, const BrakingModel& braking = {}) {
    using logic::Equations;
    using logic::Term;
    program.register_builtin({"path_intersects", 2}, [](std::span<const Term> args) {
        auto a = term_to_path(args[0]);
        auto b = term_to_path(args[1]);
        if (!a || !b) {
            throw logic::EngineError("path_intersects/2 expects two paths, got " + args[0].str() +
                                     " and " + args[1].str());
        }
        return path_intersects(*a, *b) ? std::vector<Equations>{Equations{}} : std::vector<Equations>{};
    });
    program.register_builtin({"stopping_distance", 2}, [braking](std::span<const Term> args) {
        double v = logic::evaluate(args[0]).value();
        if (v < 0) throw logic::EngineError("stopping_distance/2: negative speed " + args[0].str());
        return std::vector<Equations>{Equations{{args[1], Term::decimal(stopping_distance(v, braking))}}};
    });
}

}  // namespace discern::scene
