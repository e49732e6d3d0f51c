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

#include <gtest/gtest.h>

#include <random>

#include "discern/logic.hpp"
#include "random_programs.hpp"

namespace {

using namespace discern::logic;

std::vector<std::string> answers(const Program& p, std::string_view query, const std::string& var) {
    Solver solver(p);
    std::vector<std::string> out;
    for (const auto& a : solver.solve_all(parse_query(query))) out.push_back(a.bindings.value_of(var)->str());
    return out;
}

bool holds(const Program& p, std::string_view goal) {
    Solver solver(p, SolveOptions{.explain = false});
    return solver.provable(parse_literal(goal));
}

TEST(Solver, FactsAndRulesInSourceOrder) {
    Program p = parse_program("e(a, b).\ne(b, c).\ne(c, d).\n"
                              "r(X, Y) :- e(X, Y).\nr(X, Y) :- e(X, Z), r(Z, Y).\n");
    EXPECT_EQ(answers(p, "r(a, Y)", "Y"), (std::vector<std::string>{"b", "c", "d"}));
    EXPECT_TRUE(holds(p, "r(a, d)"));
    EXPECT_FALSE(holds(p, "r(d, a)"));
}

TEST(Solver, NegationAsFailure) {
    Program p = parse_program("bird(tweety).\nbird(tux).\npenguin(tux).\n"
                              "flies(X) :- bird(X), not penguin(X).\n");
    EXPECT_EQ(answers(p, "flies(X)", "X"), (std::vector<std::string>{"tweety"}));
    EXPECT_TRUE(holds(p, "not flies(tux)"));
}

TEST(Solver, UnknownPredicatesFail) {
    Program p = parse_program("p :- missing.\n");
    EXPECT_FALSE(holds(p, "p"));
    EXPECT_TRUE(holds(p, "not missing(1)"));
}

TEST(Solver, PositiveLoopsFailInsteadOfDiverging) {
    Program p = parse_program("p :- q.\nq :- p.\nr :- r.\nr :- s.\ns.\n");
    EXPECT_FALSE(holds(p, "p"));
    EXPECT_TRUE(holds(p, "r"));
}

TEST(Solver, NonGroundNegationIsAnError) {
    Program p = parse_program("p :- not q(X).\nq(a).\n");
    Solver solver(p);
    EXPECT_THROW(solver.provable(parse_literal("p")), EngineError);
}

TEST(Solver, DepthLimitIsAnError) {
    Program p = parse_program("n(0).\nn(X) :- n(Y), X is Y + 1.\n");
    Solver solver(p, SolveOptions{.explain = false, .max_depth = 50});
    EXPECT_THROW(solver.solve_all(parse_query("n(X)"), 1000), EngineError);
}

TEST(Solver, StratificationCheckedUpFront) {
    EXPECT_THROW(Solver(parse_program("p :- not q.\nq :- not p.\n")), StratificationError);
}

TEST(Builtins, ArithmeticAndComparison) {
    Program p = parse_program("v(3).\nv(7.5).\nbig(X) :- v(X), X > 4.\n"
                              "twice(Y) :- v(X), Y is X * 2.\n");
    EXPECT_EQ(answers(p, "big(X)", "X"), (std::vector<std::string>{"7.5"}));
    EXPECT_EQ(answers(p, "twice(Y)", "Y"), (std::vector<std::string>{"6", "15.0"}));
    EXPECT_TRUE(holds(p, "3 =:= 3.0"));
    EXPECT_TRUE(holds(p, "2 =\\= 3"));
    EXPECT_TRUE(holds(p, "1 =< 1"));
    EXPECT_FALSE(holds(p, "2 < 2"));
}

TEST(Builtins, UnificationPredicates) {
    Program p;
    EXPECT_TRUE(holds(p, "f(X) = f(a)"));
    EXPECT_TRUE(holds(p, "a \\= b"));
    EXPECT_FALSE(holds(p, "f(X) \\= f(a)"));
}

TEST(Builtins, MinimumKeepsTheSmallerTerm) {
    Program p;
    EXPECT_EQ(answers(p, "minimum(15.6, 38.0, S)", "S"), (std::vector<std::string>{"15.6"}));
    EXPECT_EQ(answers(p, "minimum(38, 13.4, S)", "S"), (std::vector<std::string>{"13.4"}));
    EXPECT_EQ(answers(p, "minimum(4, 4, S)", "S"), (std::vector<std::string>{"4"}));
}

TEST(Builtins, ListMembership) {
    Program p;
    EXPECT_EQ(answers(p, "member(X, [a, b, c])", "X"), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(answers(p, "nextto(X, 2, [1, 2, 3])", "X"), (std::vector<std::string>{"1"}));
    EXPECT_EQ(answers(p, "nextto(2, Y, [1, 2, 3])", "Y"), (std::vector<std::string>{"3"}));
    EXPECT_TRUE(holds(p, "not member(4, [1, 2, 3])"));
    EXPECT_FALSE(holds(p, "nextto(3, Y, [1, 2, 3])"));
}

TEST(Builtins, CustomRegistration) {
    Program p = parse_program("ok(X) :- double(X, 8).\nn(4).\nn(5).\nq(X) :- n(X), ok(X).\n");
    p.register_builtin({"double", 2}, [](std::span<const Term> args) {
        return std::vector<Equations>{Equations{{args[1], Term::integer(evaluate(args[0]).i * 2)}}};
    });
    EXPECT_EQ(answers(p, "q(X)", "X"), (std::vector<std::string>{"4"}));
}

TEST(Solver, ConstraintsReportTheFirstViolation) {
    Program ok = parse_program("a.\n:- a, b.\n");
    EXPECT_TRUE(check_constraints(ok).ok());
    Program bad = parse_program("a.\nb.\n:- a, b.\n");
    auto report = check_constraints(bad);
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.violation->constraint.str(), ":- a, b.");
}

TEST(Solver, AnswersCarryOneProofPerGoal) {
    Program p = parse_program("a.\nb :- a.\n");
    Solver solver(p);
    auto ans = solver.solve_first(parse_query("b, not c"));
    ASSERT_TRUE(ans);
    ASSERT_EQ(ans->proofs.size(), 2u);
    EXPECT_EQ(ans->proofs[0].children.size(), 1u);
    EXPECT_EQ(ans->proofs[1].verdict, Verdict::no_evidence);
}

// Goal-directed answers match the perfect model computed bottom-up.
TEST(Solver, PropertyAgreesWithPerfectModel) {
    std::mt19937_64 rng(4242);
    std::size_t true_atoms = 0, atoms = 0;
    for (int i = 0; i < 1000; ++i) {
        auto g = discern::testing::random_program(rng);
        auto model = discern::testing::perfect_model(g);
        Program p = parse_program(g.text());
        Solver solver(p, SolveOptions{.explain = false});
        for (const auto& a : g.herbrand_base()) {
            ++atoms;
            bool want = model.count(a) > 0;
            true_atoms += want;
            ASSERT_EQ(solver.provable(positive(parse_term(g.atom_text(a)))), want)
                << g.atom_text(a) << " in\n" << g.text();
        }
    }
    // Both outcomes must be well represented for the comparison to mean much.
    EXPECT_GT(true_atoms, atoms / 10);
    EXPECT_LT(true_atoms, atoms - atoms / 10);
}

// Explanations never change the answer set.
TEST(Solver, PropertyExplainingDoesNotChangeAnswers) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        auto g = discern::testing::random_program(rng);
        Program p = parse_program(g.text());
        Solver plain(p, SolveOptions{.explain = false});
        Solver explained(p, SolveOptions{.explain = true});
        for (const auto& a : g.herbrand_base()) {
            auto goal = positive(parse_term(g.atom_text(a)));
            EXPECT_EQ(plain.provable(goal), explained.solve_first(goal).has_value());
        }
    }
}

}  // namespace
