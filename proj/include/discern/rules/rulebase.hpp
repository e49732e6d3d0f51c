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

#include <fstream>
#include <set>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "discern/logic/lint.hpp"
#include "discern/logic/program.hpp"
#include "discern/logic/stratify.hpp"
#include "discern/rules/action.hpp"
#include "discern/rules/catalog_sources.hpp"
#include "discern/scene/compile.hpp"

namespace discern::rules {

struct RuleSource {
    std::string name;
    std::string text;
};

/// A `% @group TAG` block. Rules between two tags belong to the first.
struct RuleGroup {
    std::string tag;
    std::string source;
    std::size_t line = 0;
    bool completion = false;
    std::size_t rules = 0;
};

struct Finding {
    std::string source;
    std::size_t line = 0;
    std::string message;

    std::string str() const { return source + ":" + std::to_string(line) + ": " + message; }
};

/// Raised by strict loading when the lint reports anything.
class LintError : public std::runtime_error {
public:
    explicit LintError(std::vector<Finding> findings)
        : std::runtime_error(describe(findings)), findings_(std::move(findings)) {}

    const std::vector<Finding>& findings() const noexcept { return findings_; }

private:
    static std::string describe(const std::vector<Finding>& findings) {
        std::string s = "rulebase lint failed";
        for (const auto& f : findings) s += "\n  " + f.str();
        return s;
    }

    std::vector<Finding> findings_;
};

/// Predicates the catalog consults on purpose without defining them: hooks
/// for overlays and facts the shipped rules do not use yet.
inline const std::set<logic::PredicateId>& reserved_predicates() {
    static const std::set<logic::PredicateId> reserved = {
        {"neg_suggest_action", 2},
        {"ab", 1},
        {"abnormal", 2},
    };
    return reserved;
}

/// Immutable once built; share freely between threads.
class Rulebase {
public:
    const logic::Program& program() const noexcept { return program_; }
    const logic::Stratification& stratification() const noexcept { return strata_; }
    const std::vector<RuleGroup>& groups() const noexcept { return groups_; }
    const std::vector<Finding>& findings() const noexcept { return findings_; }
    const std::vector<std::string>& sources() const noexcept { return sources_; }

    /// Name of the source file rule `index` came from.
    const std::string& origin(std::size_t index) const { return sources_[origin_.at(index)]; }

private:
    friend Rulebase build_rulebase(std::span<const RuleSource>, bool);

    logic::Program program_;
    logic::Stratification strata_;
    std::vector<RuleGroup> groups_;
    std::vector<Finding> findings_;
    std::vector<std::string> sources_;
    std::vector<std::size_t> origin_;
};

namespace detail {

inline std::vector<RuleGroup> scan_groups(const RuleSource& source) {
    std::vector<RuleGroup> out;
    std::istringstream in(source.text);
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        auto pos = line.find("@group");
        if (pos == std::string::npos || line.find('%') > pos) continue;
        std::istringstream words(line.substr(pos + 6));
        RuleGroup g;
        g.source = source.name;
        g.line = n;
        words >> g.tag;
        std::string flag;
        while (words >> flag) g.completion = g.completion || flag == "completion";
        if (!g.tag.empty()) out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<Finding> vocabulary_findings(const logic::Program& program,
                                                const std::vector<std::string>& sources,
                                                const std::vector<std::size_t>& origin) {
    std::vector<Finding> out;
    for (std::size_t idx : program.clauses_for({"select_action", 2})) {
        const auto& rule = program.rules()[idx];
        const auto& a = rule.head->args()[0];
        if (!a.is_symbol() || !action_from_string(a.name())) {
            out.push_back({sources[origin[idx]], rule.line,
                           "select_action head uses '" + a.str() + "', which is not an action"});
        }
    }
    return out;
}

}  // namespace detail

/// The catalog compiled into the library, in file-name order.
inline std::vector<RuleSource> shipped_catalog() {
    std::vector<RuleSource> out;
    for (const auto& f : kCatalogFiles) out.push_back({std::string(f.name), std::string(f.text)});
    return out;
}

inline RuleSource read_rule_source(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return {path, text.str()};
}

/// Parses, stratifies and lints the concatenation of `sources`. Throws
/// SyntaxError (attributed to its file), StratificationError, or LintError
/// when `strict` and the lint found anything.
inline Rulebase build_rulebase(std::span<const RuleSource> sources, bool strict = false) {
    Rulebase rb;
    scene::register_scene_builtins(rb.program_);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        logic::Program part;
        try {
            part = logic::parse_program(sources[i].text);
        } catch (const logic::SyntaxError& e) {
            throw e.in_source(sources[i].name);
        }
        rb.sources_.push_back(sources[i].name);
        for (const auto& rule : part.rules()) {
            rb.program_.add_rule(rule);
            rb.origin_.push_back(i);
        }
        auto groups = detail::scan_groups(sources[i]);
        for (std::size_t g = 0; g < groups.size(); ++g) {
            std::size_t end = g + 1 < groups.size() ? groups[g + 1].line : static_cast<std::size_t>(-1);
            for (const auto& rule : part.rules()) {
                if (rule.line > groups[g].line && rule.line < end) ++groups[g].rules;
            }
            rb.groups_.push_back(std::move(groups[g]));
        }
    }
    rb.strata_ = logic::stratify(rb.program_);

    std::set<logic::PredicateId> external = scene::fact_schema();
    external.insert(reserved_predicates().begin(), reserved_predicates().end());
    for (const auto& d : logic::lint_program(rb.program_, external)) {
        rb.findings_.push_back({rb.sources_[rb.origin_[d.rule]], d.line, d.message});
    }
    for (auto& f : detail::vocabulary_findings(rb.program_, rb.sources_, rb.origin_)) {
        rb.findings_.push_back(std::move(f));
    }
    if (strict && !rb.findings_.empty()) throw LintError(rb.findings_);
    return rb;
}

/// Shipped catalog followed by `overlays`. Overlays only add rules.
inline Rulebase load_rulebase(std::span<const RuleSource> overlays = {}, bool strict = false) {
    auto sources = shipped_catalog();
    sources.insert(sources.end(), overlays.begin(), overlays.end());
    return build_rulebase(sources, strict);
}

}  // namespace discern::rules
