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

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "discern/logic/builtins.hpp"
#include "discern/logic/parser.hpp"
#include "discern/logic/term.hpp"

namespace discern::logic {

/// An ordered rulebase plus its builtin registry.
///
/// Rules keep source order, which fixes the solver's search order. Build a
/// Program up front, then treat it as immutable: concurrent solvers may
/// share one Program.
class Program {
public:
    Program() : builtins_(standard_builtins()) {}

    explicit Program(std::vector<Rule> rules) : Program() {
        for (auto& r : rules) add_rule(std::move(r));
    }

    void add_rule(Rule rule) {
        std::size_t idx = rules_.size();
        if (rule.head) {
            index_[predicate_of(*rule.head)].push_back(idx);
        } else {
            constraints_.push_back(idx);
        }
        rules_.push_back(std::move(rule));
    }

    void add_fact(Term atom) { add_rule(make_fact(std::move(atom))); }

    void add_rules(std::span<const Rule> rules) {
        for (const auto& r : rules) add_rule(r);
    }

    void register_builtin(PredicateId id, Builtin fn) { builtins_[std::move(id)] = std::move(fn); }

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const BuiltinRegistry& builtins() const noexcept { return builtins_; }

    /// Indices of rules whose head has this predicate, in source order.
    std::span<const std::size_t> clauses_for(const PredicateId& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return {};
        return it->second;
    }

    /// Indices of headless rules, in source order.
    std::span<const std::size_t> constraints() const noexcept { return constraints_; }

    const Builtin* builtin(const PredicateId& id) const {
        auto it = builtins_.find(id);
        return it == builtins_.end() ? nullptr : &it->second;
    }

    bool is_builtin(const PredicateId& id) const { return builtins_.count(id) != 0; }
    bool defines(const PredicateId& id) const { return index_.count(id) != 0; }

    /// Predicates with at least one rule or fact, ordered by name/arity.
    std::vector<PredicateId> defined_predicates() const {
        std::vector<PredicateId> out;
        for (const auto& [id, _] : index_) out.push_back(id);
        return out;
    }

    /// A copy extended with extra facts; the original is untouched.
    Program with_facts(std::span<const Term> facts) const {
        Program copy = *this;
        for (const auto& f : facts) copy.add_fact(f);
        return copy;
    }

private:
    std::vector<Rule> rules_;
    std::map<PredicateId, std::vector<std::size_t>> index_;
    std::vector<std::size_t> constraints_;
    BuiltinRegistry builtins_;
};

/// Parses rulebase text. Directives are rejected here; they belong to
/// scenario files.
inline Program parse_program(std::string_view text) {
    Program program;
    for (auto& clause : parse_clauses(text)) {
        if (auto* d = std::get_if<Directive>(&clause)) {
            throw SyntaxError(d->line, 1, "#" + d->name, "directives are not allowed in a rulebase");
        }
        program.add_rule(std::get<Rule>(std::move(clause)));
    }
    return program;
}

/// Appends the clauses of `text` to an existing program.
inline void append_source(Program& program, std::string_view text) {
    Program extra = parse_program(text);
    program.add_rules(extra.rules());
}

}  // namespace discern::logic
