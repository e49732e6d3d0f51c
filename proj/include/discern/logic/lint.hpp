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
#include <set>
#include <string>
#include <vector>

#include "discern/logic/program.hpp"

namespace discern::logic {

struct Diagnostic {
    enum class Kind { undefined_predicate, unsafe_negation };

    Kind kind;
    std::string message;
    std::size_t line = 0;
    std::size_t rule = 0;  ///< index into Program::rules()
};

/// Static checks over a program:
///  - a called predicate with no clauses, no builtin and not in `external`
///    (it will fail under the closed-world rule);
///  - a variable in a negated literal that no earlier positive literal or
///    the head can bind.
inline std::vector<Diagnostic> lint_program(const Program& program,
                                            const std::set<PredicateId>& external = {}) {
    std::vector<Diagnostic> out;
    std::set<PredicateId> reported;
    for (std::size_t ri = 0; ri < program.rules().size(); ++ri) {
        const Rule& rule = program.rules()[ri];
        std::vector<Term> bound;
        auto collect = [&](const Term& t) {
            t.for_each_variable([&](const Term& v) { bound.push_back(v); });
        };
        if (rule.head) collect(*rule.head);
        for (const auto& lit : rule.body) {
            PredicateId p = lit.predicate();
            if (!program.defines(p) && !program.is_builtin(p) && !external.count(p) &&
                reported.insert(p).second) {
                out.push_back({Diagnostic::Kind::undefined_predicate,
                               "undefined predicate " + p.str() + " (always fails)", rule.line, ri});
            }
            if (lit.naf) {
                lit.atom.for_each_variable([&](const Term& v) {
                    if (v.name().rfind("_G", 0) == 0 ||
                        std::find(bound.begin(), bound.end(), v) == bound.end()) {
                        out.push_back({Diagnostic::Kind::unsafe_negation,
                                       "variable " + v.name() + " in '" + lit.str() +
                                           "' is not bound by an earlier positive literal",
                                       rule.line, ri});
                    }
                });
            } else {
                collect(lit.atom);
            }
        }
    }
    return out;
}

}  // namespace discern::logic
