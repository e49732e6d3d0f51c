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

#include "discern/logic/parser.hpp"
#include "discern/logic/program.hpp"

namespace {

using namespace discern::logic;

std::vector<Rule> rules_of(std::string_view text) {
    std::vector<Rule> out;
    for (auto& c : parse_clauses(text)) out.push_back(std::get<Rule>(c));
    return out;
}

TEST(Parser, FactsRulesAndConstraints) {
    auto rs = rules_of("a.\np(X) :- q(X), not r(X).\n:- p(b).\n");
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_TRUE(rs[0].is_fact());
    EXPECT_EQ(rs[1].str(), "p(X) :- q(X), not r(X).");
    EXPECT_TRUE(rs[2].is_constraint());
    EXPECT_EQ(rs[1].line, 2u);
    EXPECT_EQ(rs[2].line, 3u);
}

TEST(Parser, DisjunctionDesugarsToOneRulePerBranch) {
    auto rs = rules_of(
        "neg_select_action(accelerate, T) :-\n"
        "    above_speed_limit(T);\n"
        "    self_lane(SLid, T), neg_lane_clear(T, SLid, 10);\n"
        "    traffic_light(red, T).\n");
    ASSERT_EQ(rs.size(), 3u);
    for (const auto& r : rs) EXPECT_EQ(r.head->str(), "neg_select_action(accelerate,T)");
    EXPECT_EQ(rs[1].body.size(), 2u);
    EXPECT_EQ(rs[2].str(), "neg_select_action(accelerate,T) :- traffic_light(red,T).");
}

TEST(Parser, ComparisonsArithmeticAndLists) {
    auto rs = rules_of("c(CD, T) :- s(V, T), CD is 0.5 + 0.1 * V, CD =< 3, V \\= 2, m([1, 2 | R]).");
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0].body[1].atom.name(), "is");
    EXPECT_EQ(rs[0].body[2].atom.name(), "=<");
    EXPECT_EQ(rs[0].body[3].atom.name(), "\\=");
    EXPECT_EQ(rs[0].body[4].atom.str(), "m([1,2|R])");
}

TEST(Parser, NegativeNumbersAndQuotedAtoms) {
    EXPECT_EQ(parse_term("-4.5").kind(), Term::Kind::decimal);
    EXPECT_EQ(parse_term("-4.5").as_decimal(), -4.5);
    EXPECT_EQ(parse_term("'hello world'").name(), "hello world");
    EXPECT_EQ(parse_term("1.5e2").as_decimal(), 150.0);
}

TEST(Parser, AnonymousVariablesAreDistinct) {
    auto rs = rules_of("p :- q(_, _).");
    const auto& args = rs[0].body[0].atom.args();
    EXPECT_TRUE(args[0].is_variable());
    EXPECT_NE(args[0], args[1]);
}

TEST(Parser, CommentsAndDirectives) {
    auto cs = parse_clauses("% comment\n#decel(6.0).\nfact(1). % trailing\n");
    ASSERT_EQ(cs.size(), 2u);
    const auto& d = std::get<Directive>(cs[0]);
    EXPECT_EQ(d.name, "decel");
    EXPECT_EQ(d.args[0], Term::decimal(6.0));
}

TEST(Parser, NotInHeadIsReportedWithLocation) {
    try {
        parse_clauses("ok.\nnot p :- q.\n");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos);
    }
}

TEST(Parser, ErrorsCarryLineAndColumn) {
    EXPECT_THROW(parse_clauses("p(a"), SyntaxError);
    EXPECT_THROW(parse_clauses("p(a) :- ."), SyntaxError);
    EXPECT_THROW(parse_clauses("p(a) q."), SyntaxError);
    EXPECT_THROW(parse_clauses("X :- p."), SyntaxError);
    try {
        parse_clauses("p.\nq :- r(\n");
    } catch (const SyntaxError& e) {
        EXPECT_GE(e.line(), 2u);
    }
}

TEST(Parser, ErrorNamesTheSourceWhenAttributed) {
    try {
        parse_clauses("p(");
    } catch (const SyntaxError& e) {
        std::string what = e.in_source("overlay.rules").what();
        EXPECT_EQ(what.rfind("overlay.rules:1:", 0), 0u) << what;
    }
}

TEST(Program, RejectsDirectives) {
    EXPECT_THROW(parse_program("#decel(3).\n"), SyntaxError);
}

TEST(Program, IndexesClausesInOrder) {
    Program p = parse_program("p(1).\nq.\np(2).\n:- q, p(3).\n");
    auto idx = p.clauses_for({"p", 1});
    ASSERT_EQ(idx.size(), 2u);
    EXPECT_LT(idx[0], idx[1]);
    EXPECT_EQ(p.constraints().size(), 1u);
}

TEST(Parser, RoundTripsThroughText) {
    const char* text = "p(X, [a|T]) :- q(X), not r(T), X >= 2.5.";
    auto r1 = rules_of(text);
    auto r2 = rules_of(r1[0].str());
    EXPECT_EQ(r1[0].str(), r2[0].str());
}

}  // namespace
