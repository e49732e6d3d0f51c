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
#include <string>
#include <string_view>

#include "discern/logic/parser.hpp"
#include "discern/scene/frame.hpp"
#include "discern/scene/terms.hpp"
#include "discern/scene/validate.hpp"

namespace discern::scene {

namespace detail {

class ScenarioReader {
public:
    explicit ScenarioReader(std::string name) { scenario_.name = std::move(name); }

    Scenario read(std::string_view text) {
        for (auto& clause : logic::parse_clauses(text)) {
            if (auto* d = std::get_if<logic::Directive>(&clause)) {
                directive(*d);
                continue;
            }
            const auto& rule = std::get<logic::Rule>(clause);
            if (!rule.is_fact()) throw ScenarioError(rule.line, "scenario files contain facts only");
            fact(*rule.head, rule.line);
        }
        finish_frame();
        if (scenario_.frames.empty()) throw ScenarioError(0, "scenario declares no frames");
        for (std::size_t i = 0; i < scenario_.frames.size(); ++i) {
            auto diags = validate_frame(scenario_.frames[i]);
            if (!diags.empty()) {
                std::string msg = "frame " + std::to_string(scenario_.frames[i].timestamp) + ": ";
                for (std::size_t k = 0; k < diags.size(); ++k) {
                    if (k) msg += "; ";
                    msg += diags[k];
                }
                throw ScenarioError(frame_lines_[i], msg);
            }
        }
        return std::move(scenario_);
    }

private:
    using Term = logic::Term;

    static double number(const Term& t, std::size_t line, const char* what) {
        if (!t.is_number()) throw ScenarioError(line, std::string(what) + " must be a number, got " + t.str());
        return t.as_double();
    }

    static double positive(const Term& t, std::size_t line, const char* what) {
        double v = number(t, line, what);
        if (!(v > 0.0)) throw ScenarioError(line, std::string(what) + " must be positive");
        return v;
    }

    template <typename E>
    static E vocab(const Term& t, std::size_t line, const char* what) {
        if (t.is_symbol()) {
            if (auto v = from_string<E>(t.name())) return *v;
        }
        throw ScenarioError(line, std::string("unknown ") + what + " '" + t.str() + "'");
    }

    static LaneId lane(const Term& t, std::size_t line) {
        if (!t.is_number() && !t.is_symbol()) {
            throw ScenarioError(line, "lane id must be a number or symbol, got " + t.str());
        }
        return t;
    }

    static Path path(const Term& t, std::size_t line) {
        auto p = term_to_path(t);
        if (!p) throw ScenarioError(line, "malformed path " + t.str() + ", expected [p(X,Y), ...]");
        return *p;
    }

    void directive(const logic::Directive& d) {
        if (!scenario_.frames.empty() || current_) {
            throw ScenarioError(d.line, "directive #" + d.name + " must precede the first frame");
        }
        auto one_arg = [&]() -> const Term& {
            if (d.args.size() != 1) throw ScenarioError(d.line, "#" + d.name + " takes one argument");
            return d.args[0];
        };
        if (d.name == "reaction_time") {
            scenario_.braking.reaction_time = positive(one_arg(), d.line, "reaction time");
        } else if (d.name == "decel") {
            scenario_.braking.deceleration = positive(one_arg(), d.line, "deceleration");
        } else if (d.name == "name") {
            const Term& n = one_arg();
            if (!n.is_symbol()) throw ScenarioError(d.line, "#name expects a symbol");
            scenario_.name = n.name();
        } else if (d.name == "timestamps") {
            const Term& mode = one_arg();
            if (!mode.is_symbol() || (mode.name() != "sparse" && mode.name() != "contiguous")) {
                throw ScenarioError(d.line, "#timestamps expects sparse or contiguous");
            }
            sparse_ = mode.name() == "sparse";
        } else {
            throw ScenarioError(d.line, "unknown directive #" + d.name);
        }
    }

    void start_frame(const Term& t, std::size_t line) {
        if (t.kind() != Term::Kind::integer || t.as_integer() < 0) {
            throw ScenarioError(line, "frame timestamp must be a non-negative integer");
        }
        finish_frame();
        std::int64_t ts = t.as_integer();
        if (scenario_.frames.empty()) {
            if (!sparse_ && ts != 0) throw ScenarioError(line, "first frame must be 0, got " + t.str());
        } else {
            std::int64_t prev = scenario_.frames.back().timestamp;
            if (sparse_ ? ts <= prev : ts != prev + 1) {
                throw ScenarioError(line, "non-contiguous timestamp " + t.str() + " after " +
                                              std::to_string(prev));
            }
        }
        current_ = Frame{};
        current_->timestamp = ts;
        seen_.clear();
        frame_lines_.push_back(line);
    }

    void finish_frame() {
        if (!current_) return;
        static constexpr const char* mandatory[] = {"self_speed", "self_lane", "lanes", "intent"};
        for (const char* m : mandatory) {
            if (!seen_.count(m)) {
                throw ScenarioError(frame_lines_.back(), "frame " + std::to_string(current_->timestamp) +
                                                             " is missing mandatory fact " + m + "/2");
            }
        }
        scenario_.frames.push_back(std::move(*current_));
        current_.reset();
    }

    void once(const std::string& key, std::size_t line) {
        if (!seen_.insert(key).second) throw ScenarioError(line, "duplicate " + key + " fact in frame");
    }

    void fact(const Term& atom, std::size_t line) {
        const std::string& name = atom.name();
        auto args = atom.args();
        if (name == "frame" && args.size() == 1) {
            start_frame(args[0], line);
            return;
        }
        static const std::set<std::pair<std::string, std::size_t>> known = {
            {"self_speed", 2},  {"self_lane", 2},    {"lanes", 2},          {"intent", 2},
            {"speed_limit", 2}, {"location", 2},     {"traffic_light", 2},  {"traffic_sign", 2},
            {"intersection", 4}, {"arrival_rank", 2}, {"sensor", 3},        {"self_pred_path", 2},
            {"object", 6},      {"obj_pred_path", 3}};
        if (!known.count({name, args.size()})) {
            throw ScenarioError(line, "unknown predicate " + name + "/" + std::to_string(args.size()));
        }
        if (!current_) throw ScenarioError(line, name + " fact before any frame(T) declaration");
        const Term& t = args.back();
        if (t.kind() != Term::Kind::integer || t.as_integer() != current_->timestamp) {
            throw ScenarioError(line, name + " fact has timestamp " + t.str() + " inside frame " +
                                          std::to_string(current_->timestamp));
        }
        Frame& f = *current_;
        if (name == "self_speed") {
            once(name, line);
            f.ego_speed = number(args[0], line, "ego speed");
        } else if (name == "self_lane") {
            once(name, line);
            f.ego_lane = lane(args[0], line);
        } else if (name == "lanes") {
            once(name, line);
            if (!args[0].is_sequence() || args[0].tail()) throw ScenarioError(line, "lanes expects a list");
            for (const auto& l : args[0].args()) f.lanes.push_back(lane(l, line));
        } else if (name == "intent") {
            once(name, line);
            f.intent = vocab<Intent>(args[0], line, "intent");
        } else if (name == "speed_limit") {
            once(name, line);
            f.posted_speed_limit = number(args[0], line, "speed limit");
        } else if (name == "location") {
            once(name, line);
            f.location = vocab<LocationClass>(args[0], line, "location class");
        } else if (name == "traffic_light") {
            once(name, line);
            f.traffic_light = vocab<TrafficLight>(args[0], line, "traffic light state");
        } else if (name == "traffic_sign") {
            const Term& s = args[0];
            if (s.is_compound() && s.name() == "speed_limit" && s.arity() == 1) {
                f.traffic_signs.push_back({SignKind::speed_limit, number(s.args()[0], line, "speed limit sign")});
            } else {
                SignKind k = vocab<SignKind>(s, line, "traffic sign");
                if (k == SignKind::speed_limit) throw ScenarioError(line, "speed_limit sign needs a value");
                f.traffic_signs.push_back({k, 0.0});
            }
        } else if (name == "intersection") {
            once(name, line);
            f.intersection = Intersection{vocab<IntersectionKind>(args[0], line, "intersection kind"),
                                          vocab<Signaling>(args[1], line, "intersection signaling"),
                                          vocab<IntersectionPosition>(args[2], line, "intersection position")};
        } else if (name == "arrival_rank") {
            once(name, line);
            if (args[0].kind() != Term::Kind::integer) throw ScenarioError(line, "arrival rank must be an integer");
            f.arrival_rank = args[0].as_integer();
        } else if (name == "sensor") {
            f.sensors.push_back({vocab<SensorSide>(args[0], line, "sensor side"),
                                 number(args[1], line, "sensor distance")});
        } else if (name == "self_pred_path") {
            once(name, line);
            f.ego_pred_path = path(args[0], line);
        } else if (name == "object") {
            if (!args[0].is_symbol()) throw ScenarioError(line, "object id must be a symbol");
            ObjectObs o;
            o.id = args[0].name();
            o.cls = vocab<ObjectClass>(args[1], line, "object class");
            o.lane = lane(args[2], line);
            o.distance_ahead = number(args[3], line, "object distance");
            o.rel_speed = number(args[4], line, "object relative speed");
            f.objects.push_back(std::move(o));
        } else if (name == "obj_pred_path") {
            if (!args[0].is_symbol()) throw ScenarioError(line, "object id must be a symbol");
            auto it = std::find_if(f.objects.begin(), f.objects.end(),
                                   [&](const ObjectObs& o) { return o.id == args[0].name(); });
            if (it == f.objects.end()) {
                throw ScenarioError(line, "path for undeclared object " + args[0].name());
            }
            if (it->pred_path) throw ScenarioError(line, "duplicate path for object " + it->id);
            it->pred_path = path(args[1], line);
        }
    }

    Scenario scenario_;
    std::optional<Frame> current_;
    std::set<std::string> seen_;
    std::vector<std::size_t> frame_lines_;
    bool sparse_ = false;
};

}  // namespace detail

/// Parses and validates a `.scn` scenario. Throws ScenarioError (or
/// logic::SyntaxError for malformed clauses).
inline Scenario parse_scenario(std::string_view text, std::string name = "scenario") {
    return detail::ScenarioReader(std::move(name)).read(text);
}

}  // namespace discern::scene
