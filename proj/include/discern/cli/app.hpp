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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "discern/cli/bench.hpp"
#include "discern/cli/record.hpp"
#include "discern/rules/decide.hpp"
#include "discern/rules/rulebase.hpp"
#include "discern/scene/scenario_parser.hpp"

namespace discern::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,      ///< unreadable file, parse or scenario error
    kNotStratified = 2,
    kEngineError = 3,
    kGateFailed = 4,      ///< bench budget exceeded or strict lint findings
    kUsage = 64,
};

namespace detail {

/// Failure that maps straight to an exit code.
struct Exit {
    int code;
    std::string message;
};

inline scene::Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Exit{kInputError, "cannot read scenario " + path};
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return scene::parse_scenario(text.str(), std::filesystem::path(path).stem().string());
    } catch (const scene::ScenarioError& e) {
        throw Exit{kInputError, path + ": " + e.what()};
    } catch (const logic::SyntaxError& e) {
        throw Exit{kInputError, e.in_source(path).what()};
    }
}

inline rules::Rulebase load(const std::vector<std::string>& overlay_paths) {
    std::vector<rules::RuleSource> overlays;
    for (const auto& p : overlay_paths) {
        try {
            overlays.push_back(rules::read_rule_source(p));
        } catch (const std::runtime_error& e) {
            throw Exit{kInputError, e.what()};
        }
    }
    return rules::load_rulebase(overlays);
}

inline void emit(std::ostream& out, const DecisionRecord& r, bool json) {
    if (json) {
        out << to_json_line(r) << '\n';
    } else {
        out << to_text(r);
    }
}

}  // namespace detail

/// Entry point behind the `discern` binary. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`.
inline int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rule-based driving decisions with explanations", "discern"};
    app.require_subcommand(1);

    std::string format = "text";
    std::vector<std::string> overlays;
    bool explain = false;

    std::string decide_file;
    std::int64_t decide_t = 0;
    auto* decide = app.add_subcommand("decide", "Decide one frame of a scenario");
    decide->add_option("file", decide_file, "Scenario file (.scn)")->required();
    decide->add_option("-t,--t", decide_t, "Frame timestamp")->required();
    decide->add_flag("--explain", explain, "Append the rendered justification");
    decide->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    decide->add_option("--overlay", overlays, "Extra rulebase file, added after the catalog");

    std::string run_file;
    auto* run = app.add_subcommand("run", "Decide every frame of a scenario in order");
    run->add_option("file", run_file, "Scenario file (.scn)")->required();
    run->add_flag("--explain", explain, "Append the rendered justification");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    run->add_option("--overlay", overlays, "Extra rulebase file, added after the catalog");

    std::string bench_dir;
    std::size_t reps = 10;
    std::optional<double> max_avg_ms;
    std::optional<double> max_max_ms;
    auto* bench = app.add_subcommand("bench", "Measure decision latency over a corpus directory");
    bench->add_option("dir", bench_dir, "Directory of .scn files")->required();
    bench->add_option("--reps", reps, "Repetitions per frame")->check(CLI::PositiveNumber);
    bench->add_option("--assert-avg-ms", max_avg_ms, "Fail when the average exceeds this");
    bench->add_option("--assert-max-ms", max_max_ms, "Fail when any frame exceeds this");
    bench->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    bench->add_option("--overlay", overlays, "Extra rulebase file, added after the catalog");

    std::vector<std::string> check_files;
    bool strict = false;
    bool with_catalog = false;
    auto* check = app.add_subcommand("check", "Parse, stratify and lint rulebase files");
    check->add_option("files", check_files, "Rulebase files (default: the built-in catalog)");
    check->add_flag("--strict", strict, "Treat lint findings as errors");
    check->add_flag("--with-catalog", with_catalog, "Check the files as overlays on the built-in catalog");

    std::vector<const char*> argv{"discern"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    const bool json = format == "json";

    try {
        if (decide->parsed()) {
            auto scenario = detail::load_scenario(decide_file);
            if (!scenario.frame_at(decide_t)) {
                throw detail::Exit{kInputError, decide_file + ": no frame " + std::to_string(decide_t)};
            }
            auto rb = detail::load(overlays);
            detail::emit(out, make_record(rules::decide(rb, scenario, decide_t), explain), json);
            return kOk;
        }
        if (run->parsed()) {
            auto scenario = detail::load_scenario(run_file);
            auto rb = detail::load(overlays);
            for (const auto& f : scenario.frames) {
                detail::emit(out, make_record(rules::decide(rb, scenario, f.timestamp), explain), json);
            }
            return kOk;
        }
        if (bench->parsed()) {
            std::vector<std::filesystem::path> files;
            std::error_code ec;
            for (const auto& entry : std::filesystem::directory_iterator(bench_dir, ec)) {
                if (entry.is_regular_file() && entry.path().extension() == ".scn") files.push_back(entry.path());
            }
            if (ec) throw detail::Exit{kInputError, "cannot read directory " + bench_dir};
            if (files.empty()) throw detail::Exit{kInputError, "no .scn files in " + bench_dir};
            std::sort(files.begin(), files.end());
            std::vector<scene::Scenario> scenarios;
            for (const auto& f : files) scenarios.push_back(detail::load_scenario(f.string()));
            auto rb = detail::load(overlays);
            auto report = run_bench(rb, scenarios, reps);
            if (json) {
                out << bench_json(report).dump() << '\n';
            } else {
                out << bench_text(report);
            }
            bool failed = false;
            if (max_avg_ms && report.avg_ms > *max_avg_ms) {
                err << "average latency " << report.avg_ms << " ms exceeds " << *max_avg_ms << " ms\n";
                failed = true;
            }
            if (max_max_ms && report.max_ms > *max_max_ms) {
                err << "max latency " << report.max_ms << " ms exceeds " << *max_max_ms << " ms\n";
                failed = true;
            }
            return failed ? kGateFailed : kOk;
        }
        if (check->parsed()) {
            std::vector<rules::RuleSource> sources;
            if (check_files.empty() || with_catalog) sources = rules::shipped_catalog();
            for (const auto& p : check_files) {
                try {
                    sources.push_back(rules::read_rule_source(p));
                } catch (const std::runtime_error& e) {
                    throw detail::Exit{kInputError, e.what()};
                }
            }
            auto rb = rules::build_rulebase(sources, false);
            out << rb.program().rules().size() << " rules, " << rb.stratification().levels()
                << " strata, " << rb.groups().size() << " rule groups\n";
            for (const auto& g : rb.groups()) {
                out << "  " << g.tag << (g.completion ? " [completion]" : "") << "  " << g.source << ":"
                    << g.line << "  " << g.rules << (g.rules == 1 ? " rule" : " rules") << '\n';
            }
            for (const auto& f : rb.findings()) err << (strict ? "error: " : "warning: ") << f.str() << '\n';
            return strict && !rb.findings().empty() ? kGateFailed : kOk;
        }
    } catch (const detail::Exit& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const logic::SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const scene::ScenarioError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const logic::StratificationError& e) {
        err << "error: " << e.what() << '\n';
        return kNotStratified;
    } catch (const logic::EngineError& e) {
        err << "error: " << e.what() << '\n';
        return kEngineError;
    }
    return kUsage;
}

}  // namespace discern::cli
