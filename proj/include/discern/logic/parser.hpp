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

#include <cctype>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "discern/logic/term.hpp"

namespace discern::logic {

/// `#name(args).` header line; used by scenario files.
struct Directive {
    std::string name;
    std::vector<Term> args;
    std::size_t line = 0;
};

using Clause = std::variant<Rule, Directive>;

namespace detail {

struct Token {
    enum class Kind { identifier, variable, integer, decimal, punct, end };
    Kind kind = Kind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token tok;
            tok.line = line_;
            tok.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(tok);
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lex_number(tok);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    advance();
                }
                tok.text = std::string(src_.substr(start, pos_ - start));
                tok.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_')
                               ? Token::Kind::variable
                               : Token::Kind::identifier;
            } else if (c == '\'') {
                advance();
                std::size_t start = pos_;
                while (pos_ < src_.size() && src_[pos_] != '\'' && src_[pos_] != '\n') advance();
                if (pos_ >= src_.size() || src_[pos_] != '\'') {
                    throw SyntaxError(tok.line, tok.column, "'", "unterminated quoted atom");
                }
                tok.text = std::string(src_.substr(start, pos_ - start));
                tok.kind = Token::Kind::identifier;
                advance();
            } else {
                lex_punct(tok);
            }
            out.push_back(std::move(tok));
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void lex_number(Token& tok) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        bool is_decimal = false;
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            is_decimal = true;
            advance();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_;
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
            if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                is_decimal = true;
                while (pos_ < look) advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            } else {
                pos_ = save;
            }
        }
        tok.text = std::string(src_.substr(start, pos_ - start));
        tok.kind = is_decimal ? Token::Kind::decimal : Token::Kind::integer;
    }

    void lex_punct(Token& tok) {
        static constexpr std::string_view multi[] = {":-", "=<", ">=", "\\=", "=:=", "=\\="};
        for (auto m : {multi[4], multi[5], multi[0], multi[1], multi[2], multi[3]}) {
            if (src_.substr(pos_, m.size()) == m) {
                for (std::size_t i = 0; i < m.size(); ++i) advance();
                tok.text = std::string(m);
                tok.kind = Token::Kind::punct;
                return;
            }
        }
        char c = src_[pos_];
        static constexpr std::string_view singles = "()[]|,.;<>=+-*/#";
        if (singles.find(c) == std::string_view::npos) {
            throw SyntaxError(tok.line, tok.column, std::string(1, c), "unexpected character");
        }
        advance();
        tok.text = std::string(1, c);
        tok.kind = Token::Kind::punct;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

    std::vector<Clause> clauses() {
        std::vector<Clause> out;
        while (peek().kind != Token::Kind::end) parse_clause(out);
        return out;
    }

    Term single_term() {
        Term t = expr();
        expect_end();
        return t;
    }

    std::vector<Literal> single_body() {
        auto alts = body();
        if (alts.size() != 1) fail(peek(), "disjunction is not allowed in a query");
        if (peek().kind == Token::Kind::punct && peek().text == ".") next();
        expect_end();
        return std::move(alts.front());
    }

private:
    const Token& peek(std::size_t k = 0) const {
        std::size_t i = std::min(idx_ + k, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() {
        const Token& t = toks_[idx_];
        if (idx_ + 1 < toks_.size()) ++idx_;
        return t;
    }
    bool at_punct(std::string_view p) const {
        return peek().kind == Token::Kind::punct && peek().text == p;
    }
    [[noreturn]] void fail(const Token& t, const std::string& what) const {
        throw SyntaxError(t.line, t.column, t.kind == Token::Kind::end ? "end of input" : t.text, what);
    }
    void expect(std::string_view p, const char* what) {
        if (!at_punct(p)) fail(peek(), what);
        next();
    }
    void expect_end() {
        if (peek().kind != Token::Kind::end) fail(peek(), "unexpected trailing input");
    }
    void expect_clause_end() {
        if (peek().kind == Token::Kind::end) fail(peek(), "unterminated clause, expected '.'");
        expect(".", "expected '.' at end of clause");
    }

    void parse_clause(std::vector<Clause>& out) {
        anon_ = 0;
        const Token& first = peek();
        std::size_t line = first.line;
        if (at_punct("#")) {
            next();
            if (peek().kind != Token::Kind::identifier) fail(peek(), "expected directive name after '#'");
            Directive d;
            d.name = next().text;
            d.line = line;
            if (at_punct("(")) {
                next();
                d.args = arguments(")");
            }
            expect_clause_end();
            out.emplace_back(std::move(d));
            return;
        }
        if (at_punct(":-")) {
            next();
            auto alts = body();
            expect_clause_end();
            for (auto& b : alts) out.emplace_back(Rule{std::nullopt, std::move(b), line});
            return;
        }
        if (peek().kind == Token::Kind::identifier && peek().text == "not" &&
            (peek(1).kind == Token::Kind::identifier || peek(1).kind == Token::Kind::variable ||
             (peek(1).kind == Token::Kind::punct && peek(1).text == "("))) {
            fail(peek(), "negation-as-failure is not allowed in a rule head");
        }
        Term head = expr();
        if (!head.is_callable()) fail(first, "clause head must be an atom");
        if (is_builtin_operator(head)) fail(first, "clause head cannot be a comparison");
        if (at_punct(":-")) {
            next();
            auto alts = body();
            expect_clause_end();
            for (auto& b : alts) out.emplace_back(Rule{head, std::move(b), line});
            return;
        }
        expect_clause_end();
        out.emplace_back(Rule{std::move(head), {}, line});
    }

    static bool is_builtin_operator(const Term& t) {
        return t.is_compound() && t.arity() == 2 && is_operator_functor(t.name()) &&
               t.name() != "+" && t.name() != "-" && t.name() != "*" && t.name() != "/";
    }

    // body := conj (';' conj)*
    std::vector<std::vector<Literal>> body() {
        std::vector<std::vector<Literal>> alts;
        alts.push_back(conjunction());
        while (at_punct(";")) {
            next();
            alts.push_back(conjunction());
        }
        return alts;
    }

    std::vector<Literal> conjunction() {
        std::vector<Literal> lits;
        lits.push_back(literal());
        while (at_punct(",")) {
            next();
            lits.push_back(literal());
        }
        return lits;
    }

    Literal literal() {
        const Token& start = peek();
        bool naf = false;
        if (start.kind == Token::Kind::identifier && start.text == "not" &&
            !(peek(1).kind == Token::Kind::punct &&
              (peek(1).text == "," || peek(1).text == "." || peek(1).text == ";"))) {
            next();
            naf = true;
        }
        Term lhs = expr();
        static constexpr std::string_view ops[] = {"=<", "<", ">=", ">", "=", "\\=", "=:=", "=\\="};
        for (auto op : ops) {
            if (at_punct(op)) {
                next();
                Term rhs = expr();
                return {naf, Term::compound(std::string(op), {std::move(lhs), std::move(rhs)})};
            }
        }
        if (peek().kind == Token::Kind::identifier && peek().text == "is") {
            next();
            Term rhs = expr();
            return {naf, Term::compound("is", {std::move(lhs), std::move(rhs)})};
        }
        if (!lhs.is_callable()) fail(start, "expected an atom or comparison in rule body");
        return {naf, std::move(lhs)};
    }

    // expr := mul (('+'|'-') mul)*
    Term expr() {
        Term t = product();
        while (at_punct("+") || at_punct("-")) {
            std::string op = next().text;
            Term r = product();
            t = Term::compound(op, {std::move(t), std::move(r)});
        }
        return t;
    }

    Term product() {
        Term t = unary();
        while (at_punct("*") || at_punct("/")) {
            std::string op = next().text;
            Term r = unary();
            t = Term::compound(op, {std::move(t), std::move(r)});
        }
        return t;
    }

    Term unary() {
        if (at_punct("-")) {
            next();
            const Token& n = peek();
            if (n.kind == Token::Kind::integer || n.kind == Token::Kind::decimal) {
                Term v = number(next());
                return v.kind() == Term::Kind::integer ? Term::integer(-v.as_integer())
                                                       : Term::decimal(-v.as_decimal());
            }
            return Term::compound("-", {unary()});
        }
        return primary();
    }

    Term number(const Token& t) const {
        if (t.kind == Token::Kind::integer) {
            std::int64_t v = 0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc{}) fail(t, "integer out of range");
            return Term::integer(v);
        }
        return Term::decimal(std::stod(t.text));
    }

    Term primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::integer:
            case Token::Kind::decimal:
                return number(next());
            case Token::Kind::variable: {
                std::string name = next().text;
                if (name == "_") name = "_G" + std::to_string(++anon_);
                return Term::variable(std::move(name));
            }
            case Token::Kind::identifier: {
                std::string name = next().text;
                if (at_punct("(")) {
                    next();
                    auto args = arguments(")");
                    if (args.empty()) fail(t, "empty argument list");
                    return Term::compound(std::move(name), std::move(args));
                }
                return Term::symbol(std::move(name));
            }
            case Token::Kind::punct:
                if (t.text == "(") {
                    next();
                    Term inner = expr();
                    expect(")", "expected ')'");
                    return inner;
                }
                if (t.text == "[") {
                    next();
                    std::vector<Term> items;
                    std::optional<Term> tail;
                    if (!at_punct("]")) {
                        items.push_back(expr());
                        while (at_punct(",")) {
                            next();
                            items.push_back(expr());
                        }
                        if (at_punct("|")) {
                            next();
                            tail = expr();
                        }
                    }
                    expect("]", "expected ']' to close list");
                    return Term::sequence(std::move(items), std::move(tail));
                }
                break;
            case Token::Kind::end:
                fail(t, "unterminated clause, expected a term");
        }
        fail(t, "unexpected token");
    }

    std::vector<Term> arguments(std::string_view close) {
        std::vector<Term> args;
        if (at_punct(close)) {
            next();
            return args;
        }
        args.push_back(expr());
        while (at_punct(",")) {
            next();
            args.push_back(expr());
        }
        expect(close, "expected ',' or ')' in argument list");
        return args;
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    int anon_ = 0;
};

}  // namespace detail

/// Parses rulebase or scenario source into clauses in source order.
/// A body disjunction `a :- b ; c.` yields one rule per disjunct.
inline std::vector<Clause> parse_clauses(std::string_view text) {
    return detail::Parser(text).clauses();
}

/// Parses a standalone term such as `f(X, [1,2])`.
inline Term parse_term(std::string_view text) { return detail::Parser(text).single_term(); }

/// Parses a conjunctive query such as `select_action(A, 0), not p`.
inline std::vector<Literal> parse_query(std::string_view text) {
    return detail::Parser(text).single_body();
}

inline Literal parse_literal(std::string_view text) {
    auto lits = parse_query(text);
    if (lits.size() != 1) throw SyntaxError(1, 1, std::string(text), "expected a single literal");
    return lits.front();
}

}  // namespace discern::logic
