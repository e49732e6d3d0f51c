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
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "discern/logic/program.hpp"
#include "discern/logic/proof.hpp"
#include "discern/logic/stratify.hpp"
#include "discern/logic/substitution.hpp"

namespace discern::logic {

namespace detail {

// Non-owning callable reference; continuations never outlive the frame that
// created them.
template <typename Sig>
class FunctionRef;

template <typename R, typename... Args>
class FunctionRef<R(Args...)> {
public:
    template <typename F>
        requires(!std::is_same_v<std::remove_cvref_t<F>, FunctionRef> &&
                 std::is_invocable_r_v<R, F&, Args...>)
    FunctionRef(F&& f) noexcept  // NOLINT(google-explicit-constructor)
        : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
          call_([](void* o, Args... a) -> R {
              return (*static_cast<std::remove_reference_t<F>*>(o))(std::forward<Args>(a)...);
          }) {}

    R operator()(Args... a) const { return call_(obj_, std::forward<Args>(a)...); }

private:
    void* obj_;
    R (*call_)(void*, Args...);
};

}  // namespace detail

struct SolveOptions {
    /// Attach failed-search evidence to every `no_evidence` node of an answer.
    bool explain = true;
    std::size_t max_depth = 2000;
    /// Upper bound on evidence nodes built per answer.
    std::size_t evidence_budget = 4096;
    /// Nesting limit for explaining failed positive subgoals.
    std::size_t explain_depth = 24;
};

struct Answer {
    /// Resolved bindings of the query's variables.
    Substitution bindings;
    /// One proof per query goal, in query order.
    std::vector<ProofTree> proofs;
};

struct ConstraintViolation {
    std::size_t rule_index = 0;
    Rule constraint;
    std::vector<ProofTree> proofs;
};

struct ConstraintReport {
    std::optional<ConstraintViolation> violation;

    bool ok() const noexcept { return !violation.has_value(); }
};

/// Goal-directed evaluation of a stratified program.
///
/// Depth-first, left-to-right, clauses in source order. `not p` must be
/// ground when selected and succeeds iff the search for `p` finitely fails.
/// A ground call that repeats on the current derivation path fails that
/// branch. Predicates without clauses or builtins fail (closed world).
///
/// A Solver owns its search state and is not shareable across threads; the
/// Program it reads may be.
class Solver {
public:
    explicit Solver(const Program& program, SolveOptions options = {})
        : program_(program), options_(options), strata_(stratify(program)) {}

    /// Reuses a stratification computed for a program with the same rules
    /// (added facts do not change it).
    Solver(const Program& program, Stratification strata, SolveOptions options = {})
        : program_(program), options_(options), strata_(std::move(strata)) {}

    const Stratification& stratification() const noexcept { return strata_; }
    const Program& program() const noexcept { return program_; }

    /// Streams answers in deterministic order; return false to stop.
    void solve(std::span<const Literal> goals, const std::function<bool(const Answer&)>& on_answer) {
        run(goals, options_.explain, on_answer);
    }

    std::vector<Answer> solve_all(std::span<const Literal> goals,
                                  std::size_t limit = std::numeric_limits<std::size_t>::max()) {
        std::vector<Answer> out;
        if (limit == 0) return out;
        solve(goals, [&](const Answer& a) {
            out.push_back(a);
            return out.size() < limit;
        });
        return out;
    }

    std::optional<Answer> solve_first(std::span<const Literal> goals) {
        std::optional<Answer> out;
        solve(goals, [&](const Answer& a) {
            out = a;
            return false;
        });
        return out;
    }

    std::optional<Answer> solve_first(const Literal& goal) {
        return solve_first(std::span<const Literal>(&goal, 1));
    }

    /// True iff the goal has at least one answer. Builds no evidence.
    bool provable(const Literal& goal) {
        bool found = false;
        run(std::span<const Literal>(&goal, 1), false, [&](const Answer&) {
            found = true;
            return false;
        });
        return found;
    }

    /// A `no_evidence` node for `atom` carrying its failed search.
    /// Only meaningful when `atom` has no answers.
    ProofTree explain_absence(const Term& atom) {
        reset();
        ProofTree node;
        node.goal = positive(atom);
        node.verdict = Verdict::no_evidence;
        node.children = failure_evidence(atom, 0);
        for (auto& c : node.children) expand(c);
        return node;
    }

    /// Runs every headless rule's body as a query; ok iff all of them fail.
    ConstraintReport check_constraints() {
        for (std::size_t idx : program_.constraints()) {
            const Rule& rule = program_.rules()[idx];
            std::uint32_t scope = next_scope_++;
            std::vector<Literal> body;
            for (const auto& l : rule.body) body.push_back(l.renamed(scope));
            if (auto answer = solve_first(body)) {
                return {ConstraintViolation{idx, rule, std::move(answer->proofs)}};
            }
        }
        return {};
    }

private:
    using Cont = detail::FunctionRef<bool()>;

    void reset() {
        subst_ = Substitution{};
        stack_.clear();
        path_.clear();
        explaining_.clear();
        budget_ = options_.evidence_budget;
    }

    void run(std::span<const Literal> goals, bool explain,
             const std::function<bool(const Answer&)>& on_answer) {
        reset();
        std::vector<Literal> query(goals.begin(), goals.end());
        std::vector<Term> vars;
        for (const auto& g : query) {
            g.atom.for_each_variable([&](const Term& v) {
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
            });
        }
        const std::size_t n = query.size();
        prove_body(query, 0, 0, [&]() -> bool {
            Answer a;
            for (std::size_t i = stack_.size() - n; i < stack_.size(); ++i) {
                a.proofs.push_back(apply(subst_, stack_[i]));
            }
            for (const auto& v : vars) {
                Term value = subst_.apply(v);
                if (!(value == v)) a.bindings.bind(v, std::move(value));
            }
            if (explain) {
                budget_ = options_.evidence_budget;
                for (auto& p : a.proofs) expand(p);
            }
            return on_answer(a);
        });
    }

    bool prove_body(std::span<const Literal> body, std::size_t i, std::size_t depth, Cont k) {
        if (i == body.size()) return k();
        return prove(body[i], depth, [&]() -> bool { return prove_body(body, i + 1, depth, k); });
    }

    bool on_path(const Term& call) const {
        return std::find(path_.begin(), path_.end(), call) != path_.end();
    }

    static const Term& path_placeholder() {
        static const Term placeholder = Term::variable("_call");
        return placeholder;
    }

    bool prove(const Literal& goal, std::size_t depth, Cont k) {
        if (depth > options_.max_depth) {
            throw EngineError("recursion depth limit exceeded at " + subst_.apply(goal.atom).str());
        }
        if (goal.naf) return prove_negation(goal, depth, k);

        Term call = subst_.apply(goal.atom);
        if (!call.is_callable()) throw EngineError("goal is not callable: " + call.str());
        PredicateId pred = predicate_of(call);
        if (const Builtin* b = program_.builtin(pred)) return prove_builtin(*b, call, k);

        const bool ground = call.ground();
        if (ground && on_path(call)) return true;  // loop check: fail this branch
        path_.push_back(ground ? call : path_placeholder());

        for (std::size_t idx : program_.clauses_for(pred)) {
            const Rule& rule = program_.rules()[idx];
            const std::uint32_t scope = next_scope_++;
            Term head = rule.head->renamed(scope);
            auto mark = subst_.mark();
            bool keep_going = true;
            if (unify(call, head, subst_)) {
                std::vector<Literal> body;
                body.reserve(rule.body.size());
                for (const auto& l : rule.body) body.push_back(l.renamed(scope));
                keep_going = prove_body(body, 0, depth + 1, [&]() -> bool {
                    const std::size_t n = body.size();
                    ProofTree node;
                    node.goal = positive(call);
                    node.rule = RuleInstance{idx, head, body};
                    auto first = stack_.end() - static_cast<std::ptrdiff_t>(n);
                    node.children.assign(std::make_move_iterator(first),
                                         std::make_move_iterator(stack_.end()));
                    stack_.erase(first, stack_.end());
                    stack_.push_back(std::move(node));

                    // The goal is solved: siblings must not see it as an ancestor.
                    Term self = std::move(path_.back());
                    path_.pop_back();
                    bool r = k();
                    path_.push_back(std::move(self));

                    ProofTree back = std::move(stack_.back());
                    stack_.pop_back();
                    for (auto& c : back.children) stack_.push_back(std::move(c));
                    return r;
                });
            }
            subst_.undo(mark);
            if (!keep_going) {
                path_.pop_back();
                return false;
            }
        }
        path_.pop_back();
        return true;
    }

    bool prove_builtin(const Builtin& fn, const Term& call, Cont k) {
        std::vector<Equations> alternatives = fn(call.args());
        for (const auto& eqs : alternatives) {
            auto mark = subst_.mark();
            bool ok = true;
            for (const auto& [lhs, rhs] : eqs) {
                if (!unify(lhs, rhs, subst_)) {
                    ok = false;
                    break;
                }
            }
            bool keep_going = true;
            if (ok) {
                ProofTree leaf;
                leaf.goal = positive(call);
                leaf.builtin = true;
                stack_.push_back(std::move(leaf));
                keep_going = k();
                stack_.pop_back();
            }
            subst_.undo(mark);
            if (!keep_going) return false;
        }
        return true;
    }

    bool prove_negation(const Literal& goal, std::size_t depth, Cont k) {
        Term atom = subst_.apply(goal.atom);
        if (!atom.ground()) {
            std::string vars;
            atom.for_each_variable([&](const Term& v) {
                if (!vars.empty()) vars += ", ";
                vars += v.name();
            });
            throw EngineError("non-ground negation-as-failure goal 'not " + atom.str() +
                              "': unbound " + vars);
        }
        if (exists(atom, depth + 1)) return true;
        ProofTree node;
        node.goal = negated(atom);
        node.verdict = Verdict::no_evidence;
        stack_.push_back(std::move(node));
        bool r = k();
        stack_.pop_back();
        return r;
    }

    // Independent sub-search: the negated goal's truth does not depend on
    // the caller's path.
    bool exists(const Term& atom, std::size_t depth) {
        std::vector<Term> saved;
        saved.swap(path_);
        bool found = false;
        try {
            prove(positive(atom), depth, [&]() -> bool {
                found = true;
                return false;
            });
        } catch (...) {
            path_.swap(saved);
            throw;
        }
        path_.swap(saved);
        return found;
    }

    std::optional<ProofTree> first_proof(const Term& atom) {
        std::vector<Term> saved;
        saved.swap(path_);
        std::optional<ProofTree> out;
        try {
            prove(positive(atom), 0, [&]() -> bool {
                out = apply(subst_, stack_.back());
                return false;
            });
        } catch (...) {
            path_.swap(saved);
            throw;
        }
        path_.swap(saved);
        return out;
    }

    static ProofTree truncated_marker() {
        ProofTree t;
        t.marker = Marker::truncated;
        t.verdict = Verdict::no_evidence;
        return t;
    }

    // Fills `no_evidence` nodes for negated goals with their failed search,
    // recursively through any proofs that evidence brings in.
    void expand(ProofTree& node) {
        if (node.verdict == Verdict::no_evidence && node.goal.naf && node.children.empty() &&
            node.marker == Marker::none) {
            if (budget_ == 0) {
                node.children.push_back(truncated_marker());
                return;
            }
            node.children = failure_evidence(node.goal.atom, 0);
        }
        for (auto& c : node.children) expand(c);
    }

    // For each clause whose head matches `atom`: every way its body prefix
    // succeeds, followed by the body literal that then fails.
    std::vector<ProofTree> failure_evidence(const Term& atom, std::size_t level) {
        PredicateId pred = predicate_of(atom);
        if (program_.is_builtin(pred)) return {};
        if (level > options_.explain_depth || budget_ == 0) return {truncated_marker()};

        std::vector<Term> saved;
        saved.swap(path_);
        path_.push_back(atom.ground() ? atom : path_placeholder());
        explaining_.push_back(atom);

        std::vector<ProofTree> out;
        try {
            for (std::size_t idx : program_.clauses_for(pred)) {
                if (budget_ == 0) {
                    out.push_back(truncated_marker());
                    break;
                }
                const Rule& rule = program_.rules()[idx];
                const std::uint32_t scope = next_scope_++;
                Term head = rule.head->renamed(scope);
                auto mark = subst_.mark();
                if (unify(atom, head, subst_)) {
                    std::vector<Literal> body;
                    for (const auto& l : rule.body) body.push_back(l.renamed(scope));
                    explain_body(body, 0, level, out);
                }
                subst_.undo(mark);
            }
        } catch (...) {
            explaining_.pop_back();
            path_.swap(saved);
            throw;
        }
        explaining_.pop_back();
        path_.swap(saved);
        return out;
    }

    void explain_body(std::span<const Literal> body, std::size_t i, std::size_t level,
                      std::vector<ProofTree>& out) {
        if (i >= body.size()) return;
        bool any = false;
        prove(body[i], 0, [&]() -> bool {
            any = true;
            explain_body(body, i + 1, level, out);
            return budget_ > 0;
        });
        if (!any) out.push_back(evidence_for(body[i], level));
    }

    ProofTree evidence_for(const Literal& lit, std::size_t level) {
        if (budget_ > 0) --budget_;
        Term atom = subst_.apply(lit.atom);
        if (lit.naf) {
            // `not r` failed because r holds.
            if (auto proof = first_proof(atom)) return std::move(*proof);
            return truncated_marker();
        }
        ProofTree node;
        node.goal = positive(atom);
        node.verdict = Verdict::no_evidence;
        if (program_.is_builtin(predicate_of(atom))) {
            node.builtin = true;
        } else if (std::find(explaining_.begin(), explaining_.end(), atom) != explaining_.end()) {
            node.marker = Marker::loop;
        } else {
            node.children = failure_evidence(atom, level + 1);
        }
        return node;
    }

    const Program& program_;
    SolveOptions options_;
    Stratification strata_;

    Substitution subst_;
    std::vector<ProofTree> stack_;
    std::vector<Term> path_;
    std::vector<Term> explaining_;
    std::uint32_t next_scope_ = 1;
    std::size_t budget_ = 0;
};

/// Convenience wrapper: every answer of `goals` against `program`.
inline std::vector<Answer> solve(const Program& program, std::span<const Literal> goals,
                                 SolveOptions options = {}) {
    Solver solver(program, options);
    return solver.solve_all(goals);
}

inline ConstraintReport check_constraints(const Program& program, SolveOptions options = {}) {
    Solver solver(program, options);
    return solver.check_constraints();
}

}  // namespace discern::logic
