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
#include <optional>
#include <string>
#include <vector>

#include "discern/logic/substitution.hpp"
#include "discern/logic/term.hpp"

namespace discern::logic {

enum class Verdict : std::uint8_t { holds, no_evidence };

enum class Marker : std::uint8_t {
    none,
    loop,       // failed because the call repeats on the current path
    truncated,  // explanation budget exhausted
    fallback,   // synthetic node standing in for a default decision
};

/// The clause instance used to derive a `holds` node.
struct RuleInstance {
    std::size_t rule_index = 0;
    Term head;
    std::vector<Literal> body;
};

/// Justification for a goal.
///
/// * `holds` + rule: children match the rule body one-to-one, in order.
/// * `holds` + builtin: a leaf recording a host evaluation.
/// * `no_evidence` on `not p`: children are the failed search for `p`.
/// * `no_evidence` on a positive goal: appears inside failure evidence.
struct ProofTree {
    Literal goal;
    Verdict verdict = Verdict::holds;
    std::optional<RuleInstance> rule;
    std::vector<ProofTree> children;
    bool builtin = false;
    Marker marker = Marker::none;

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& c : children) n += c.size();
        return n;
    }
    std::size_t depth() const {
        std::size_t d = 0;
        for (const auto& c : children) d = std::max(d, c.depth());
        return d + 1;
    }
};

inline ProofTree apply(const Substitution& s, const ProofTree& t) {
    ProofTree out;
    out.goal = s.apply(t.goal);
    out.verdict = t.verdict;
    out.builtin = t.builtin;
    out.marker = t.marker;
    if (t.rule) {
        RuleInstance ri;
        ri.rule_index = t.rule->rule_index;
        ri.head = s.apply(t.rule->head);
        for (const auto& l : t.rule->body) ri.body.push_back(s.apply(l));
        out.rule = std::move(ri);
    }
    out.children.reserve(t.children.size());
    for (const auto& c : t.children) out.children.push_back(apply(s, c));
    return out;
}

namespace detail {

// Unbound variables print as Var0, Var1, ... in order of first appearance.
class VariableNamer {
public:
    std::string name(const Term& var) {
        std::string key = var.name() + "#" + std::to_string(var.scope());
        auto [it, inserted] = names_.emplace(key, "Var" + std::to_string(names_.size()));
        return it->second;
    }

    void write(const Term& t, std::string& out) {
        switch (t.kind()) {
            case Term::Kind::variable:
                out += name(t);
                return;
            case Term::Kind::sequence: {
                out += '[';
                auto items = t.args();
                for (std::size_t i = 0; i < items.size(); ++i) {
                    if (i) out += ',';
                    write(items[i], out);
                }
                if (const Term* tail = t.tail()) {
                    out += '|';
                    write(*tail, out);
                }
                out += ']';
                return;
            }
            case Term::Kind::compound: {
                if (t.arity() == 2 && is_operator_functor(t.name())) {
                    write(t.args()[0], out);
                    out += t.name() == "is" ? " is " : t.name();
                    write(t.args()[1], out);
                    return;
                }
                if (t.arity() == 1 && t.name() == "-") {
                    out += '-';
                    write(t.args()[0], out);
                    return;
                }
                out += t.name();
                out += '(';
                auto args = t.args();
                for (std::size_t i = 0; i < args.size(); ++i) {
                    if (i) out += ',';
                    write(args[i], out);
                }
                out += ')';
                return;
            }
            default:
                t.write(out);
        }
    }

private:
    std::map<std::string, std::string> names_;
};

inline std::string describe_goal(const Term& atom, VariableNamer& namer) {
    std::string s = "'" + atom.name() + "' holds";
    auto args = atom.args();
    if (!atom.is_compound() || args.empty()) return s;
    s += " (for ";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += (i + 1 == args.size()) ? ", and " : ", ";
        namer.write(args[i], s);
    }
    s += ")";
    return s;
}

inline void render_node(const ProofTree& node, std::size_t depth, std::size_t max_depth,
                        VariableNamer& namer, std::string& out) {
    std::string indent(2 * depth, ' ');
    out += indent;
    if (node.marker == Marker::truncated && node.children.empty()) {
        out += "...\n";
        return;
    }
    if (node.verdict == Verdict::no_evidence) out += "there is no evidence that ";
    out += describe_goal(node.goal.atom, namer);
    if (node.marker == Marker::loop) out += ", as it depends on itself";
    if (!node.children.empty()) out += " because";
    out += '\n';
    if (node.children.empty()) return;
    if (depth + 1 >= max_depth) {
        out += std::string(2 * (depth + 1), ' ');
        out += "...\n";
        return;
    }
    for (const auto& c : node.children) render_node(c, depth + 1, max_depth, namer, out);
}

}  // namespace detail

inline constexpr std::size_t kUnlimitedDepth = static_cast<std::size_t>(-1);

/// English rendering, one line per node, two spaces of indent per level.
/// With a finite `max_depth`, nodes at the limit show their children as a
/// single `...` line.
inline std::string render_justification(const ProofTree& tree,
                                        std::size_t max_depth = kUnlimitedDepth) {
    std::string out;
    detail::VariableNamer namer;
    detail::render_node(tree, 0, max_depth == 0 ? 1 : max_depth, namer, out);
    return out;
}

inline constexpr const char* kConstraintsHold = "The global constraints hold.";

}  // namespace discern::logic
