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
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "discern/logic/program.hpp"

namespace discern::logic {

/// Predicate → stratum. Predicates never mentioned sit in stratum 0.
struct Stratification {
    std::map<PredicateId, int> stratum;

    int of(const PredicateId& id) const {
        auto it = stratum.find(id);
        return it == stratum.end() ? 0 : it->second;
    }
    int levels() const {
        int top = 0;
        for (const auto& [_, s] : stratum) top = std::max(top, s);
        return top + 1;
    }
};

namespace detail {

struct DependencyGraph {
    std::vector<PredicateId> nodes;
    std::map<PredicateId, std::size_t> id;
    // (target, through negation)
    std::vector<std::vector<std::pair<std::size_t, bool>>> edges;

    std::size_t node(const PredicateId& p) {
        auto [it, inserted] = id.emplace(p, nodes.size());
        if (inserted) {
            nodes.push_back(p);
            edges.emplace_back();
        }
        return it->second;
    }
};

inline DependencyGraph dependency_graph(const Program& program) {
    DependencyGraph g;
    for (const auto& rule : program.rules()) {
        if (!rule.head) continue;
        std::size_t h = g.node(predicate_of(*rule.head));
        for (const auto& lit : rule.body) {
            PredicateId p = lit.predicate();
            if (program.is_builtin(p)) continue;
            std::size_t b = g.node(p);
            g.edges[h].emplace_back(b, lit.naf);
        }
    }
    return g;
}

}  // namespace detail

/// Assigns strata so that positive dependencies never point to a higher
/// stratum and negative ones always point strictly lower. Throws
/// StratificationError naming the predicates of a negation cycle.
///
/// Positive cycles are accepted; the solver's loop check handles them.
inline Stratification stratify(const Program& program) {
    auto g = detail::dependency_graph(program);
    const std::size_t n = g.nodes.size();

    // Tarjan; components come out sinks first.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    int counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto [w, _] : g.edges[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> members;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = static_cast<int>(components.size());
                members.push_back(w);
            } while (w != v);
            components.push_back(std::move(members));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0) visit(v);
    }

    std::vector<int> level(components.size(), 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        int s = 0;
        for (std::size_t v : components[c]) {
            for (auto [w, naf] : g.edges[v]) {
                if (comp[w] == static_cast<int>(c)) {
                    if (naf) {
                        std::vector<PredicateId> cycle;
                        for (std::size_t m : components[c]) cycle.push_back(g.nodes[m]);
                        std::sort(cycle.begin(), cycle.end());
                        throw StratificationError(std::move(cycle));
                    }
                    continue;
                }
                s = std::max(s, level[comp[w]] + (naf ? 1 : 0));
            }
        }
        level[c] = s;
    }

    Stratification out;
    for (std::size_t v = 0; v < n; ++v) out.stratum[g.nodes[v]] = level[comp[v]];
    return out;
}

}  // namespace discern::logic
