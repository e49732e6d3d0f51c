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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "discern/cli/app.hpp"
#include "discern/logic.hpp"
#include "discern/rules.hpp"
#include "discern/scene.hpp"
#include "frame_gen.hpp"
#include "path_oracle.hpp"
#include "random_programs.hpp"

namespace {

using namespace discern;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

scene::Scenario corpus(const std::string& name) {
    std::ifstream in(std::string(DISCERN_CORPUS_DIR) + "/" + name + ".scn");
    std::ostringstream text;
    text << in.rdbuf();
    return scene::parse_scenario(text.str(), name);
}

std::vector<std::string> run_actions(const rules::Rulebase& rb, const scene::Scenario& s) {
    std::vector<std::string> out;
    for (const auto& f : s.frames) out.emplace_back(rules::to_string(rules::decide(rb, s, f.timestamp).chosen));
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "]";
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run_app(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

Outcome oracle_equivalence() {
    auto start = Clock::now();
    std::mt19937_64 rng(20260101);
    const int programs = 1000;
    int mismatches = 0;
    std::size_t atoms = 0;
    for (int i = 0; i < programs; ++i) {
        auto g = testing::random_program(rng);
        auto model = testing::perfect_model(g);
        logic::Program p = logic::parse_program(g.text());
        logic::Solver solver(p, logic::SolveOptions{.explain = false});
        for (const auto& a : g.herbrand_base()) {
            ++atoms;
            bool got = solver.provable(logic::positive(logic::parse_term(g.atom_text(a))));
            if (got != (model.count(a) > 0)) ++mismatches;
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d programs, %zu atoms, %d mismatches, %.2f s", programs, atoms, mismatches,
                  secs);
    return {mismatches == 0 && secs < 60.0, buf};
}

Outcome scenario_suite(const rules::Rulebase& rb) {
    Outcome o;
    auto expect = [&](const std::string& name, const std::vector<std::string>& want) {
        auto got = run_actions(rb, corpus(name));
        if (got != want) o.pass = false;
        o.detail += name + "=" + join(got) + " ";
    };
    expect("fig5a", {"brake"});
    expect("fig5b_clear", {"change_lane_left"});
    expect("fig5b_blocked", {"brake"});
    expect("fig6a", {"brake", "change_lane_left"});
    expect("fig6b", {"brake", "turn_right"});
    expect("intersection_4way_rank2", {"brake"});

    auto c = run_actions(rb, corpus("fig5c"));
    bool ok = !c.empty() && c.back() == "change_lane_right";
    auto s = corpus("fig5c");
    for (std::size_t i = 0; ok && i + 1 < c.size(); ++i) {
        if (c[i] == "change_lane_right") ok = false;
    }
    // The target lane must be clear exactly when the lane change happens.
    for (std::size_t i = 0; ok && i < s.frames.size(); ++i) {
        bool clear = true;
        for (const auto& obj : s.frames[i].objects) {
            if (obj.lane == logic::Term::integer(2) && std::fabs(obj.distance_ahead) <= 10.0) clear = false;
        }
        if (clear != (c[i] == "change_lane_right")) ok = false;
    }
    if (!ok) o.pass = false;
    o.detail += "fig5c=" + join(c);
    return o;
}

Outcome mitigation(const rules::Rulebase& rb) {
    Outcome o;
    auto limit = rules::effective_speed_limit(rb, scene::LocationClass::city, 38.0);
    if (!limit || std::fabs(*limit - 15.6) > 1e-9) o.pass = false;
    o.detail = "city/38.0 -> " + (limit ? logic::format_decimal(*limit) : std::string("none"));

    int above = 0, accel = 0;
    auto check = [&](const scene::Scenario& s) {
        for (const auto& f : s.frames) {
            if (f.ego_speed <= 15.6) continue;
            ++above;
            if (rules::decide(rb, s, f.timestamp).chosen == rules::Action::accelerate) ++accel;
        }
    };
    check(corpus("misread_speed_sign"));
    testing::FrameGen gen(38);
    for (int i = 0; i < 200; ++i) {
        scene::Frame f = gen.frame();
        f.location = scene::LocationClass::city;
        f.posted_speed_limit = 38.0;
        f.ego_speed = gen.tenth(15.7, 38.0);
        check(testing::FrameGen::scenario(std::move(f)));
    }
    if (accel != 0) o.pass = false;
    o.detail += "; accelerate above limit " + std::to_string(accel) + "/" + std::to_string(above);

    auto fig3 = run_actions(rb, corpus("fig3_sensor_override"));
    if (fig3 != std::vector<std::string>{"change_lane_right"}) o.pass = false;
    o.detail += "; fig3=" + join(fig3);
    return o;
}

Outcome justification() {
    const std::string file = std::string(DISCERN_CORPUS_DIR) + "/fig6a.scn";
    std::vector<std::string> renders;
    for (int i = 0; i < 10; ++i) {
        std::string out;
        if (run_cli({"decide", file, "--t", "0", "--explain", "--format", "json"}, &out) != 0) {
            return {false, "decide exited non-zero"};
        }
        renders.push_back(cli::parse_json_line(out).justification.value_or(""));
    }
    const std::string& j = renders.front();
    Outcome o;
    for (const char* phrase : {"'suggest_action' holds", "there is no evidence that 'neg_select_action'",
                               "'intent' holds (for merge_into_left_lane"}) {
        if (j.find(phrase) == std::string::npos) {
            o.pass = false;
            o.detail += std::string("missing \"") + phrase + "\"; ";
        }
    }
    std::string body = j.substr(0, j.size() - (!j.empty() && j.back() == '\n' ? 1 : 0));
    std::string last = body.substr(body.rfind('\n') + 1);
    if (last != "The global constraints hold.") {
        o.pass = false;
        o.detail += "last line \"" + last + "\"; ";
    }
    bool identical = std::all_of(renders.begin(), renders.end(), [&](const std::string& r) { return r == j; });
    if (!identical) o.pass = false;
    o.detail += "phrases checked, final line ok, " + std::string(identical ? "10/10 identical" : "renders differ");
    return o;
}

Outcome safety(const rules::Rulebase& rb) {
    testing::FrameGen gen(500);
    int ahead = 0, red = 0;
    for (int i = 0; i < 500; ++i) {
        auto s = testing::FrameGen::scenario(gen.frame_with_user_ahead());
        auto a = rules::decide(rb, s, 0).chosen;
        if (a == rules::Action::accelerate || a == rules::Action::cruise) ++ahead;
    }
    for (int i = 0; i < 500; ++i) {
        auto s = testing::FrameGen::scenario(gen.frame_with_red_light());
        if (rules::decide(rb, s, 0).chosen == rules::Action::accelerate) ++red;
    }
    return {ahead == 0 && red == 0, "user ahead: " + std::to_string(ahead) + "/500 violations; red light: " +
                                        std::to_string(red) + "/500 violations"};
}

Outcome exception_dominance(const rules::Rulebase& rb) {
    using logic::Term;
    testing::FrameGen gen(200);
    int violations = 0, underived = 0, domain = 0;
    for (int i = 0; i < 200; ++i) {
        auto s = testing::FrameGen::scenario(gen.frame());
        rules::Action a = rules::kAllActions[static_cast<std::size_t>(gen.integer(0, 6))];
        Term t0 = Term::integer(0);
        std::vector<Term> inject;
        if (gen.coin()) {
            switch (a) {
                case rules::Action::accelerate:
                    inject.push_back(Term::compound("traffic_light", {Term::symbol("red"), t0}));
                    break;
                case rules::Action::change_lane_left:
                    inject.push_back(Term::compound("sensor", {Term::symbol("left"), Term::integer(0), t0}));
                    break;
                case rules::Action::change_lane_right:
                    inject.push_back(Term::compound("sensor", {Term::symbol("right"), Term::integer(0), t0}));
                    break;
                case rules::Action::turn_left:
                case rules::Action::turn_right:
                    inject.push_back(logic::parse_term("self_pred_path([p(0,0),p(10,0)], 0)"));
                    inject.push_back(logic::parse_term("obj_pred_path(injected, [p(5,-5),p(5,5)], 0)"));
                    break;
                default:
                    break;
            }
        }
        if (inject.empty()) {
            inject.push_back(Term::compound("neg_select_action", {Term::symbol(std::string(rules::to_string(a))), t0}));
        } else {
            ++domain;
        }
        auto facts = scene::compile_frame(s, 0);
        facts.insert(facts.end(), inject.begin(), inject.end());
        logic::Program p = rb.program().with_facts(facts);
        scene::register_scene_builtins(p, s.braking);
        logic::Solver solver(p, rb.stratification(), logic::SolveOptions{.explain = false});
        auto neg = Term::compound("neg_select_action", {Term::symbol(std::string(rules::to_string(a))), t0});
        if (!solver.provable(logic::positive(neg))) ++underived;
        auto d = rules::decide(rb, s, 0, inject);
        auto sugg = d.suggested_actions();
        if (std::find(sugg.begin(), sugg.end(), a) != sugg.end()) ++violations;
    }
    return {violations == 0 && underived == 0,
            "200 pairs (" + std::to_string(domain) + " via scene facts), " + std::to_string(violations) +
                " violations, " + std::to_string(underived) + " injections not deriving the exception"};
}

Outcome latency() {
    std::string out;
    int code = run_cli({"bench", DISCERN_CORPUS_DIR, "--reps", "10", "--assert-avg-ms", "450", "--assert-max-ms",
                        "900", "--format", "json"},
                       &out);
    auto j = nlohmann::json::parse(out, nullptr, false);
    if (j.is_discarded()) return {false, "bench produced no report, exit " + std::to_string(code)};
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu frames x 10 reps, avg %.3f ms, max %.3f ms, exit %d",
                  j["frames"].get<std::size_t>(), j["avg_ms"].get<double>(), j["max_ms"].get<double>(), code);
    return {code == 0 && j["avg_ms"].get<double>() <= 450.0 && j["max_ms"].get<double>() <= 900.0, buf};
}

Outcome stratification_gate() {
    Outcome o;
    try {
        logic::stratify(logic::parse_program("p :- not q.\nq :- not p.\n"));
        o.pass = false;
        o.detail = "even loop accepted; ";
    } catch (const logic::StratificationError& e) {
        std::string msg = e.what();
        bool names = msg.find("p/0") != std::string::npos && msg.find("q/0") != std::string::npos;
        if (!names) o.pass = false;
        o.detail = "even loop rejected: \"" + msg + "\"; ";
    }
    int code = run_cli({"check", "--strict"});
    if (code != 0) o.pass = false;
    o.detail += "check --strict exit " + std::to_string(code);
    return o;
}

Outcome geometry() {
    std::mt19937_64 rng(9);
    int compared = 0, disagree = 0, skipped = 0, hits = 0;
    while (compared < 1000) {
        auto a = testing::random_path(rng);
        auto b = testing::random_path(rng);
        auto verdict = testing::path_oracle(a, b);
        if (verdict == testing::OracleVerdict::ambiguous) {
            ++skipped;
            continue;
        }
        ++compared;
        bool want = verdict == testing::OracleVerdict::intersect;
        hits += want;
        if (scene::path_intersects(a, b) != want) ++disagree;
    }
    double s10 = scene::stopping_distance(10.0);
    double s20 = scene::stopping_distance(20.0);
    bool ok = disagree == 0 && std::fabs(s10 - 18.33) <= 0.01 && std::fabs(s20 - 53.33) <= 0.01;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d pairs (%d intersecting, %d in band skipped), %d disagreements; "
                  "stopping_distance(10)=%.4f, (20)=%.4f",
                  compared, hits, skipped, disagree, s10, s20);
    return {ok, buf};
}

}  // namespace

int main() {
    auto rb = rules::load_rulebase();
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "scenario suite", [&] { return scenario_suite(rb); }},
        {3, "mitigation", [&] { return mitigation(rb); }},
        {4, "justification fidelity", justification},
        {5, "safety properties", [&] { return safety(rb); }},
        {6, "exception dominance", [&] { return exception_dominance(rb); }},
        {7, "latency budget", latency},
        {8, "stratification gate", stratification_gate},
        {9, "geometry", geometry},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
