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

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "discern/logic/proof.hpp"
#include "discern/logic/solver.hpp"
#include "discern/rules/action.hpp"
#include "discern/rules/rulebase.hpp"
#include "discern/scene/compile.hpp"
#include "discern/scene/frame.hpp"

namespace discern::rules {

struct Suggestion {
    Action action;
    logic::ProofTree proof;
};

struct Decision {
    std::string scenario;
    std::int64_t timestamp = 0;
    Action chosen = Action::cruise;
    /// In `action/1` fact order.
    std::vector<Suggestion> suggested;
    /// Proof of the chosen suggestion, or the fallback node for cruise.
    logic::ProofTree justification;
    logic::ConstraintReport constraints;
    bool fallback = false;
    double latency_ms = 0.0;

    std::vector<Action> suggested_actions() const {
        std::vector<Action> out;
        for (const auto& s : suggested) out.push_back(s.action);
        return out;
    }
};

namespace detail {

inline logic::Term suggest_goal(std::string_view action, std::int64_t t) {
    return logic::Term::compound("suggest_action",
                                 {logic::Term::symbol(std::string(action)), logic::Term::integer(t)});
}

/// Candidate actions in fact order, restricted to the action vocabulary.
inline std::vector<Action> candidates(logic::Solver& solver) {
    std::vector<Action> out;
    auto goal = logic::positive(logic::Term::compound("action", {logic::Term::variable("A")}));
    for (const auto& answer : solver.solve_all(std::span<const logic::Literal>(&goal, 1))) {
        auto a = answer.bindings.value_of("A");
        if (!a || !a->is_symbol()) continue;
        if (auto act = action_from_string(a->name())) {
            if (std::find(out.begin(), out.end(), *act) == out.end()) out.push_back(*act);
        }
    }
    return out;
}

}  // namespace detail

/// Evaluates the frame at `t` against a private copy of the rulebase plus
/// `extra_facts`. Engine errors are rethrown with the scenario and frame.
inline Decision decide(const Rulebase& rulebase, const scene::Scenario& scenario, std::int64_t t,
                       std::span<const logic::Term> extra_facts = {}) {
    auto started = std::chrono::steady_clock::now();
    Decision d;
    d.scenario = scenario.name;
    d.timestamp = t;

    auto facts = scene::compile_frame(scenario, t);
    facts.insert(facts.end(), extra_facts.begin(), extra_facts.end());
    logic::Program working = rulebase.program().with_facts(facts);
    scene::register_scene_builtins(working, scenario.braking);

    scene::Intent intent = scene::Intent::continue_in_lane;
    for (const auto& f : scenario.frames) {
        if (f.timestamp == t) intent = f.intent;
    }

    try {
        logic::Solver solver(working, rulebase.stratification());
        std::vector<Action> candidates = detail::candidates(solver);
        for (Action a : candidates) {
            if (auto answer = solver.solve_first(logic::positive(detail::suggest_goal(to_string(a), t)))) {
                d.suggested.push_back({a, std::move(answer->proofs.front())});
            }
        }
        auto actions = d.suggested_actions();
        d.chosen = arbitrate(actions, intent);
        if (d.suggested.empty()) {
            d.fallback = true;
            logic::ProofTree node;
            node.goal = logic::positive(logic::Term::compound(
                "fallback", {logic::Term::symbol("cruise"), logic::Term::integer(t)}));
            node.marker = logic::Marker::fallback;
            for (Action a : candidates) {
                node.children.push_back(solver.explain_absence(detail::suggest_goal(to_string(a), t)));
            }
            d.justification = std::move(node);
        } else {
            for (const auto& s : d.suggested) {
                if (s.action == d.chosen) d.justification = s.proof;
            }
        }
        d.constraints = solver.check_constraints();
    } catch (const logic::EngineError& e) {
        throw logic::EngineError("scenario " + scenario.name + ", frame " + std::to_string(t) + ": " +
                                 e.what());
    }

    d.latency_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return d;
}

/// Rendered justification followed by the constraint footer line.
inline std::string render_decision(const Decision& d, std::size_t max_depth = logic::kUnlimitedDepth) {
    std::string out = logic::render_justification(d.justification, max_depth);
    if (d.constraints.ok()) {
        out += logic::kConstraintsHold;
    } else {
        out += "The global constraint '" + d.constraints.violation->constraint.str() + "' is violated.";
    }
    out += '\n';
    return out;
}

/// `max_speed(location, S)` given `posted_speed_limit(location, posted)`.
/// No value when an `abnormal/2` fact blocks the conclusion.
inline std::optional<double> effective_speed_limit(const Rulebase& rulebase, scene::LocationClass location,
                                                   double posted,
                                                   std::span<const logic::Term> extra_facts = {}) {
    using logic::Term;
    Term loc = Term::symbol(std::string(scene::to_string(location)));
    std::vector<Term> facts(extra_facts.begin(), extra_facts.end());
    facts.push_back(Term::compound("posted_speed_limit", {loc, Term::number(posted)}));
    logic::Program working = rulebase.program().with_facts(facts);
    logic::Solver solver(working, rulebase.stratification(), logic::SolveOptions{.explain = false});
    auto goal = logic::positive(Term::compound("max_speed", {loc, Term::variable("S")}));
    auto answer = solver.solve_first(goal);
    if (!answer) return std::nullopt;
    auto s = answer->bindings.value_of("S");
    if (!s || !s->is_number()) return std::nullopt;
    return s->as_double();
}

}  // namespace discern::rules
