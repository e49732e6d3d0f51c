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
#include <span>
#include <utility>
#include <vector>

#include "discern/logic/substitution.hpp"
#include "discern/logic/term.hpp"

namespace discern::logic {

/// One way a builtin can succeed: the equations the solver must unify.
using Equations = std::vector<std::pair<Term, Term>>;

/// Host evaluation hook. Receives fully resolved arguments and returns the
/// alternative solutions in order; an empty result means failure.
using Builtin = std::function<std::vector<Equations>(std::span<const Term>)>;

using BuiltinRegistry = std::map<PredicateId, Builtin>;

/// Numeric value produced by arithmetic evaluation.
struct Number {
    bool is_integer = true;
    std::int64_t i = 0;
    double d = 0.0;

    double value() const { return is_integer ? static_cast<double>(i) : d; }
    Term term() const { return is_integer ? Term::integer(i) : Term::decimal(d); }
};

inline Number evaluate(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::integer:
            return {true, t.as_integer(), 0.0};
        case Term::Kind::decimal:
            return {false, 0, t.as_decimal()};
        case Term::Kind::variable:
            throw EngineError("arithmetic on unbound variable " + t.name());
        case Term::Kind::compound:
            if (t.arity() == 1 && t.name() == "-") {
                Number v = evaluate(t.args()[0]);
                return v.is_integer ? Number{true, -v.i, 0.0} : Number{false, 0, -v.d};
            }
            if (t.arity() == 2) {
                const std::string& op = t.name();
                if (op == "+" || op == "-" || op == "*" || op == "/") {
                    Number a = evaluate(t.args()[0]);
                    Number b = evaluate(t.args()[1]);
                    if (op == "/") {
                        if (b.value() == 0.0) throw EngineError("division by zero in " + t.str());
                        if (a.is_integer && b.is_integer && a.i % b.i == 0) return {true, a.i / b.i, 0.0};
                        return {false, 0, a.value() / b.value()};
                    }
                    if (a.is_integer && b.is_integer) {
                        std::int64_t r = op == "+" ? a.i + b.i : op == "-" ? a.i - b.i : a.i * b.i;
                        return {true, r, 0.0};
                    }
                    double r = op == "+"   ? a.value() + b.value()
                               : op == "-" ? a.value() - b.value()
                                           : a.value() * b.value();
                    return {false, 0, r};
                }
            }
            break;
        default:
            break;
    }
    throw EngineError("arithmetic on non-numeric term " + t.str());
}

/// Integers compare exactly; mixed or decimal operands compare as doubles.
inline int compare_numbers(const Number& a, const Number& b) {
    if (a.is_integer && b.is_integer) return (a.i > b.i) - (a.i < b.i);
    double x = a.value();
    double y = b.value();
    return (x > y) - (x < y);
}

namespace detail {

inline std::vector<Equations> succeed() { return {Equations{}}; }
inline std::vector<Equations> fail() { return {}; }

template <typename Pred>
Builtin comparison(Pred pred) {
    return [pred](std::span<const Term> args) {
        int c = compare_numbers(evaluate(args[0]), evaluate(args[1]));
        return pred(c) ? succeed() : fail();
    };
}

inline const Term& require_list(const Term& t, const char* who) {
    if (!t.is_sequence() && !(t.is_symbol() && t.name() == "[]")) {
        throw EngineError(std::string(who) + " expects a list, got " + t.str());
    }
    if (t.tail()) throw EngineError(std::string(who) + " expects a proper list, got " + t.str());
    return t;
}

}  // namespace detail

/// `=<, <, >=, >, =, \=, =:=, =\=, is/2, minimum/3, member/2, nextto/3`.
inline BuiltinRegistry standard_builtins() {
    BuiltinRegistry r;
    r[{"=<", 2}] = detail::comparison([](int c) { return c <= 0; });
    r[{"<", 2}] = detail::comparison([](int c) { return c < 0; });
    r[{">=", 2}] = detail::comparison([](int c) { return c >= 0; });
    r[{">", 2}] = detail::comparison([](int c) { return c > 0; });
    r[{"=:=", 2}] = detail::comparison([](int c) { return c == 0; });
    r[{"=\\=", 2}] = detail::comparison([](int c) { return c != 0; });
    r[{"=", 2}] = [](std::span<const Term> args) {
        return std::vector<Equations>{Equations{{args[0], args[1]}}};
    };
    r[{"\\=", 2}] = [](std::span<const Term> args) {
        Substitution scratch;
        return unify(args[0], args[1], scratch) ? detail::fail() : detail::succeed();
    };
    r[{"is", 2}] = [](std::span<const Term> args) {
        return std::vector<Equations>{Equations{{args[0], evaluate(args[1]).term()}}};
    };
    r[{"minimum", 3}] = [](std::span<const Term> args) {
        Number a = evaluate(args[0]);
        Number b = evaluate(args[1]);
        const Term& smaller = compare_numbers(a, b) <= 0 ? args[0] : args[1];
        return std::vector<Equations>{Equations{{args[2], smaller}}};
    };
    r[{"member", 2}] = [](std::span<const Term> args) {
        const Term& list = detail::require_list(args[1], "member/2");
        std::vector<Equations> alts;
        for (const auto& item : list.args()) alts.push_back({{args[0], item}});
        return alts;
    };
    r[{"nextto", 3}] = [](std::span<const Term> args) {
        const Term& list = detail::require_list(args[2], "nextto/3");
        auto items = list.args();
        std::vector<Equations> alts;
        for (std::size_t i = 0; i + 1 < items.size(); ++i) {
            alts.push_back({{args[0], items[i]}, {args[1], items[i + 1]}});
        }
        return alts;
    };
    return r;
}

}  // namespace discern::logic
