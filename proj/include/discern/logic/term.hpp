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

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace discern::logic {

/// A first-order term: variable, symbol, integer, decimal, sequence or
/// compound. Sequences may carry an open tail (`[H|T]`); the tail is stored
/// as the last element of the argument vector.
///
/// Variables are identified by (name, scope). Parsed clauses use scope 0;
/// the solver renames each clause instance into a fresh scope.
class Term {
public:
    enum class Kind : std::uint8_t { variable, symbol, integer, decimal, sequence, compound };

    Term() = default;

    static Term variable(std::string name, std::uint32_t scope = 0) {
        Term t(Kind::variable);
        t.name_ = std::move(name);
        t.scope_ = scope;
        return t;
    }
    static Term symbol(std::string name) {
        Term t(Kind::symbol);
        t.name_ = std::move(name);
        return t;
    }
    static Term integer(std::int64_t value) {
        Term t(Kind::integer);
        t.int_ = value;
        return t;
    }
    static Term decimal(double value) {
        Term t(Kind::decimal);
        t.dec_ = value;
        return t;
    }
    /// Integral values become integers, everything else a decimal.
    static Term number(double value) {
        if (std::isfinite(value) && std::floor(value) == value && std::fabs(value) < 1e15) {
            return integer(static_cast<std::int64_t>(value));
        }
        return decimal(value);
    }
    static Term sequence(std::vector<Term> items, std::optional<Term> tail = std::nullopt) {
        Term t(Kind::sequence);
        t.args_ = std::move(items);
        if (tail) {
            t.args_.push_back(std::move(*tail));
            t.has_tail_ = true;
        }
        return t;
    }
    static Term compound(std::string functor, std::vector<Term> args) {
        if (args.empty()) return symbol(std::move(functor));
        Term t(Kind::compound);
        t.name_ = std::move(functor);
        t.args_ = std::move(args);
        return t;
    }

    Kind kind() const noexcept { return kind_; }
    bool is_variable() const noexcept { return kind_ == Kind::variable; }
    bool is_symbol() const noexcept { return kind_ == Kind::symbol; }
    bool is_compound() const noexcept { return kind_ == Kind::compound; }
    bool is_sequence() const noexcept { return kind_ == Kind::sequence; }
    bool is_number() const noexcept { return kind_ == Kind::integer || kind_ == Kind::decimal; }
    /// Symbols and compounds can stand as atoms of a literal.
    bool is_callable() const noexcept { return kind_ == Kind::symbol || kind_ == Kind::compound; }

    /// Variable name, symbol name or compound functor.
    const std::string& name() const noexcept { return name_; }
    std::uint32_t scope() const noexcept { return scope_; }
    std::int64_t as_integer() const noexcept { return int_; }
    double as_decimal() const noexcept { return dec_; }
    double as_double() const noexcept {
        return kind_ == Kind::integer ? static_cast<double>(int_) : dec_;
    }

    /// Compound arguments or sequence items (excluding an open tail).
    std::span<const Term> args() const noexcept {
        return {args_.data(), args_.size() - (has_tail_ ? 1 : 0)};
    }
    std::size_t arity() const noexcept { return kind_ == Kind::compound ? args_.size() : 0; }
    /// Open tail of a sequence, or nullptr for a proper list.
    const Term* tail() const noexcept { return has_tail_ ? &args_.back() : nullptr; }

    bool ground() const {
        if (kind_ == Kind::variable) return false;
        for (const auto& a : args_) {
            if (!a.ground()) return false;
        }
        return true;
    }

    template <typename F>
    void for_each_variable(F&& f) const {
        if (kind_ == Kind::variable) {
            f(*this);
            return;
        }
        for (const auto& a : args_) a.for_each_variable(f);
    }

    /// Copy with every variable moved into `scope`.
    Term renamed(std::uint32_t scope) const {
        if (kind_ == Kind::variable) return variable(name_, scope);
        if (args_.empty()) return *this;
        Term t = *this;
        for (auto& a : t.args_) a = a.renamed(scope);
        return t;
    }

    std::string str() const {
        std::string out;
        write(out);
        return out;
    }

    void write(std::string& out) const;

    friend bool operator==(const Term& a, const Term& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::variable:
                return a.scope_ == b.scope_ && a.name_ == b.name_;
            case Kind::symbol:
                return a.name_ == b.name_;
            case Kind::integer:
                return a.int_ == b.int_;
            case Kind::decimal:
                return a.dec_ == b.dec_;
            case Kind::sequence:
                return a.has_tail_ == b.has_tail_ && a.args_ == b.args_;
            case Kind::compound:
                return a.name_ == b.name_ && a.args_ == b.args_;
        }
        return false;
    }

    /// Total order: kind first, then contents. Used for sorted fact sets.
    friend std::weak_ordering operator<=>(const Term& a, const Term& b) {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        switch (a.kind_) {
            case Kind::variable:
                if (a.scope_ != b.scope_) return a.scope_ <=> b.scope_;
                return a.name_ <=> b.name_;
            case Kind::symbol:
                return a.name_ <=> b.name_;
            case Kind::integer:
                return a.int_ <=> b.int_;
            case Kind::decimal:
                if (a.dec_ < b.dec_) return std::weak_ordering::less;
                if (b.dec_ < a.dec_) return std::weak_ordering::greater;
                return std::weak_ordering::equivalent;
            case Kind::sequence:
            case Kind::compound: {
                if (auto c = a.name_ <=> b.name_; c != 0) return c;
                if (a.args_.size() != b.args_.size()) return a.args_.size() <=> b.args_.size();
                for (std::size_t i = 0; i < a.args_.size(); ++i) {
                    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
                }
                return a.has_tail_ <=> b.has_tail_;
            }
        }
        return std::weak_ordering::equivalent;
    }

private:
    explicit Term(Kind k) : kind_(k) {}

    Kind kind_ = Kind::symbol;
    bool has_tail_ = false;
    std::uint32_t scope_ = 0;
    std::int64_t int_ = 0;
    double dec_ = 0.0;
    std::string name_;
    std::vector<Term> args_;
};

/// Shortest round-trip text for a decimal; always carries a '.' or exponent.
inline std::string format_decimal(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

inline bool is_operator_functor(std::string_view f) {
    return f == "+" || f == "-" || f == "*" || f == "/" || f == "=<" || f == "<" ||
           f == ">=" || f == ">" || f == "=" || f == "\\=" || f == "is" || f == "=:=" ||
           f == "=\\=";
}

inline void Term::write(std::string& out) const {
    switch (kind_) {
        case Kind::variable:
            out += name_;
            if (scope_ != 0) {
                out += '#';
                out += std::to_string(scope_);
            }
            return;
        case Kind::symbol:
            out += name_;
            return;
        case Kind::integer:
            out += std::to_string(int_);
            return;
        case Kind::decimal:
            out += format_decimal(dec_);
            return;
        case Kind::sequence: {
            out += '[';
            auto items = args();
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i) out += ',';
                items[i].write(out);
            }
            if (has_tail_) {
                out += '|';
                args_.back().write(out);
            }
            out += ']';
            return;
        }
        case Kind::compound:
            if (args_.size() == 2 && is_operator_functor(name_)) {
                auto operand = [&](const Term& t) {
                    bool wrap = t.is_compound() && is_operator_functor(t.name_);
                    if (wrap) out += '(';
                    t.write(out);
                    if (wrap) out += ')';
                };
                operand(args_[0]);
                if (name_ == "is") {
                    out += " is ";
                } else {
                    out += name_;
                }
                operand(args_[1]);
                return;
            }
            if (args_.size() == 1 && name_ == "-") {
                out += '-';
                args_[0].write(out);
                return;
            }
            out += name_;
            out += '(';
            for (std::size_t i = 0; i < args_.size(); ++i) {
                if (i) out += ',';
                args_[i].write(out);
            }
            out += ')';
            return;
    }
}

/// Predicate identity: name plus arity.
struct PredicateId {
    std::string name;
    std::size_t arity = 0;

    std::string str() const { return name + "/" + std::to_string(arity); }
    friend auto operator<=>(const PredicateId&, const PredicateId&) = default;
    friend bool operator==(const PredicateId&, const PredicateId&) = default;
};

inline PredicateId predicate_of(const Term& atom) {
    return {atom.name(), atom.arity()};
}

struct Literal {
    bool naf = false;
    Term atom;

    PredicateId predicate() const { return predicate_of(atom); }
    std::string str() const { return naf ? "not " + atom.str() : atom.str(); }
    Literal renamed(std::uint32_t scope) const { return {naf, atom.renamed(scope)}; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal positive(Term atom) { return {false, std::move(atom)}; }
inline Literal negated(Term atom) { return {true, std::move(atom)}; }

/// A clause. No head means an integrity constraint; no body means a fact.
struct Rule {
    std::optional<Term> head;
    std::vector<Literal> body;
    std::size_t line = 0;

    bool is_fact() const { return head && body.empty(); }
    bool is_constraint() const { return !head.has_value(); }

    std::string str() const {
        std::string out = head ? head->str() : std::string{};
        if (!body.empty()) {
            out += head ? " :- " : ":- ";
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (i) out += ", ";
                out += body[i].str();
            }
        }
        out += '.';
        return out;
    }
};

inline Rule make_fact(Term atom) { return Rule{std::move(atom), {}, 0}; }

// Errors --------------------------------------------------------------------

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t line, std::size_t column, std::string token, std::string message,
                std::string source = {})
        : std::runtime_error(describe(line, column, token, message, source)),
          line_(line),
          column_(column),
          token_(std::move(token)),
          message_(std::move(message)),
          source_(std::move(source)) {}

    /// Same error attributed to a named source file.
    SyntaxError in_source(std::string source) const {
        return SyntaxError(line_, column_, token_, message_, std::move(source));
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }
    const std::string& source() const noexcept { return source_; }

private:
    static std::string describe(std::size_t line, std::size_t column, const std::string& token,
                                const std::string& message, const std::string& source) {
        std::string s = source.empty() ? std::string{} : source + ":";
        s += std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!token.empty()) s += " near '" + token + "'";
        return s;
    }

    std::size_t line_;
    std::size_t column_;
    std::string token_;
    std::string message_;
    std::string source_;
};

class StratificationError : public std::runtime_error {
public:
    explicit StratificationError(std::vector<PredicateId> cycle)
        : std::runtime_error(describe(cycle)), cycle_(std::move(cycle)) {}

    const std::vector<PredicateId>& cycle() const noexcept { return cycle_; }

private:
    static std::string describe(const std::vector<PredicateId>& cycle) {
        std::string s = "program is not stratified: negation cycle through ";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) s += ", ";
            s += cycle[i].str();
        }
        return s;
    }

    std::vector<PredicateId> cycle_;
};

/// Dynamic evaluation failure (non-ground negation, bad arithmetic, depth).
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace discern::logic
