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

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "discern/logic/term.hpp"

namespace discern::logic {

struct VarKey {
    std::string name;
    std::uint32_t scope = 0;

    static VarKey of(const Term& var) { return {var.name(), var.scope()}; }
    friend bool operator==(const VarKey&, const VarKey&) = default;
};

struct VarKeyHash {
    std::size_t operator()(const VarKey& k) const noexcept {
        return std::hash<std::string>{}(k.name) * 31u + k.scope;
    }
};

/// Variable bindings in triangular form with an undo trail.
///
/// `apply` resolves a term completely, so the resolved view is idempotent.
/// The occurs-check keeps every binding acyclic.
class Substitution {
public:
    using Mark = std::size_t;

    bool empty() const noexcept { return bindings_.empty(); }
    std::size_t size() const noexcept { return bindings_.size(); }

    const Term* lookup(const Term& var) const {
        auto it = bindings_.find(VarKey::of(var));
        return it == bindings_.end() ? nullptr : &it->second;
    }

    /// Follows variable chains until an unbound variable or a non-variable.
    const Term& walk(const Term& t) const {
        const Term* cur = &t;
        while (cur->is_variable()) {
            const Term* next = lookup(*cur);
            if (!next) break;
            cur = next;
        }
        return *cur;
    }

    Term apply(const Term& t) const {
        const Term& w = walk(t);
        switch (w.kind()) {
            case Term::Kind::variable:
            case Term::Kind::symbol:
            case Term::Kind::integer:
            case Term::Kind::decimal:
                return w;
            case Term::Kind::compound: {
                std::vector<Term> args;
                args.reserve(w.args().size());
                for (const auto& a : w.args()) args.push_back(apply(a));
                return Term::compound(w.name(), std::move(args));
            }
            case Term::Kind::sequence: {
                std::vector<Term> items;
                for (const auto& a : w.args()) items.push_back(apply(a));
                if (const Term* tail = w.tail()) {
                    Term rest = apply(*tail);
                    if (rest.is_sequence()) {
                        // Splice a resolved tail into a flat list.
                        for (const auto& a : rest.args()) items.push_back(a);
                        if (const Term* t2 = rest.tail()) return Term::sequence(std::move(items), *t2);
                        return Term::sequence(std::move(items));
                    }
                    if (rest.is_symbol() && rest.name() == "[]") return Term::sequence(std::move(items));
                    return Term::sequence(std::move(items), std::move(rest));
                }
                return Term::sequence(std::move(items));
            }
        }
        return w;
    }

    Literal apply(const Literal& l) const { return {l.naf, apply(l.atom)}; }

    /// Binds an unbound variable. Caller guarantees the occurs-check.
    void bind(const Term& var, Term value) {
        VarKey key = VarKey::of(var);
        trail_.push_back(key);
        bindings_.emplace(std::move(key), std::move(value));
    }

    Mark mark() const noexcept { return trail_.size(); }

    void undo(Mark m) {
        while (trail_.size() > m) {
            bindings_.erase(trail_.back());
            trail_.pop_back();
        }
    }

    bool occurs(const Term& var, const Term& t) const {
        const Term& w = walk(t);
        if (w.is_variable()) return w == var;
        for (const auto& a : w.args()) {
            if (occurs(var, a)) return true;
        }
        if (const Term* tail = w.tail()) return occurs(var, *tail);
        return false;
    }

    /// Fully-resolved value of a variable, if bound.
    std::optional<Term> value_of(const Term& var) const {
        if (!lookup(var)) return std::nullopt;
        return apply(var);
    }

    std::optional<Term> value_of(const std::string& name) const {
        return value_of(Term::variable(name));
    }

private:
    std::unordered_map<VarKey, Term, VarKeyHash> bindings_;
    std::vector<VarKey> trail_;
};

namespace detail {

inline bool is_nil(const Term& t) { return t.is_symbol() && t.name() == "[]"; }

inline bool unify_in_place(const Term& a, const Term& b, Substitution& s);

// Unifies the suffix of sequence `a` starting at item `i` with the suffix of
// `b` starting at `j`.
inline bool unify_sequences(const Term& a, std::size_t i, const Term& b, std::size_t j,
                            Substitution& s) {
    auto ai = a.args();
    auto bj = b.args();
    while (i < ai.size() && j < bj.size()) {
        if (!unify_in_place(ai[i], bj[j], s)) return false;
        ++i;
        ++j;
    }
    auto rest = [](const Term& seq, std::size_t from) {
        auto items = seq.args();
        std::vector<Term> r(items.begin() + static_cast<std::ptrdiff_t>(from), items.end());
        if (const Term* t = seq.tail()) return Term::sequence(std::move(r), *t);
        return Term::sequence(std::move(r));
    };
    auto tail_or_nil = [](const Term& seq) {
        return seq.tail() ? *seq.tail() : Term::sequence({});
    };
    // Leftover items can only be absorbed by the other side's open tail.
    if (i < ai.size()) return b.tail() && unify_in_place(*b.tail(), rest(a, i), s);
    if (j < bj.size()) return a.tail() && unify_in_place(*a.tail(), rest(b, j), s);
    if (!a.tail() && !b.tail()) return true;
    return unify_in_place(tail_or_nil(a), tail_or_nil(b), s);
}

inline bool unify_in_place(const Term& x, const Term& y, Substitution& s) {
    const Term& a = s.walk(x);
    const Term& b = s.walk(y);
    if (a.is_variable() && b.is_variable() && a == b) return true;
    if (a.is_variable()) {
        if (s.occurs(a, b)) return false;
        s.bind(a, b);
        return true;
    }
    if (b.is_variable()) {
        if (s.occurs(b, a)) return false;
        s.bind(b, a);
        return true;
    }
    // `[]` the symbol and the empty sequence are the same list.
    if (a.is_sequence() && is_nil(b)) return a.args().empty() && (!a.tail() || unify_in_place(*a.tail(), b, s));
    if (b.is_sequence() && is_nil(a)) return b.args().empty() && (!b.tail() || unify_in_place(*b.tail(), a, s));
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::symbol:
            return a.name() == b.name();
        case Term::Kind::integer:
            return a.as_integer() == b.as_integer();
        case Term::Kind::decimal:
            return a.as_decimal() == b.as_decimal();
        case Term::Kind::compound: {
            if (a.name() != b.name() || a.arity() != b.arity()) return false;
            auto aa = a.args();
            auto ba = b.args();
            for (std::size_t i = 0; i < aa.size(); ++i) {
                if (!unify_in_place(aa[i], ba[i], s)) return false;
            }
            return true;
        }
        case Term::Kind::sequence:
            return unify_sequences(a, 0, b, 0, s);
        case Term::Kind::variable:
            break;
    }
    return false;
}

}  // namespace detail

/// Extends `s` in place with a most general unifier of `a` and `b`.
/// On failure `s` is left exactly as it was.
inline bool unify(const Term& a, const Term& b, Substitution& s) {
    auto m = s.mark();
    if (detail::unify_in_place(a, b, s)) return true;
    s.undo(m);
    return false;
}

/// Value-returning form: the extended substitution, or nullopt on failure.
inline std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s = {}) {
    Substitution out = s;
    if (!unify(a, b, out)) return std::nullopt;
    return out;
}

}  // namespace discern::logic
