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

#include <fstream>
#include <sstream>

#include "discern/logic/parser.hpp"
#include "discern/scene/compile.hpp"
#include "discern/scene/scenario_parser.hpp"

namespace {

using namespace discern::scene;

constexpr const char* kMinimal =
    "frame(0).\n"
    "self_speed(5.0, 0).\n"
    "self_lane(1, 0).\n"
    "lanes([1, 2], 0).\n"
    "intent(continue_in_lane, 0).\n";

std::size_t error_line(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ScenarioError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no error for\n" << text;
    return 0;
}

std::string error_text(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

TEST(Scenario, MinimalFrame) {
    auto s = parse_scenario(kMinimal, "mini");
    EXPECT_EQ(s.name, "mini");
    ASSERT_EQ(s.frames.size(), 1u);
    const auto& f = s.frames[0];
    EXPECT_DOUBLE_EQ(f.ego_speed, 5.0);
    EXPECT_EQ(f.ego_lane.str(), "1");
    EXPECT_EQ(f.lanes.size(), 2u);
    EXPECT_EQ(f.traffic_light, TrafficLight::none);
    EXPECT_FALSE(f.location);
}

TEST(Scenario, Directives) {
    auto s = parse_scenario(std::string("#name(demo).\n#reaction_time(0.5).\n#decel(8).\n") + kMinimal);
    EXPECT_EQ(s.name, "demo");
    EXPECT_DOUBLE_EQ(s.braking.reaction_time, 0.5);
    EXPECT_DOUBLE_EQ(s.braking.deceleration, 8.0);
}

TEST(Scenario, ObjectsAndPaths) {
    auto s = parse_scenario(std::string(kMinimal) +
                            "object(p1, pedestrian, offroad, 8.0, -1.0, 0).\n"
                            "obj_pred_path(p1, [p(3, 8), p(0, 8)], 0).\n"
                            "self_pred_path([p(0, 0), p(0, 20)], 0).\n");
    const auto& f = s.frames[0];
    ASSERT_EQ(f.objects.size(), 1u);
    EXPECT_EQ(f.objects[0].cls, ObjectClass::pedestrian);
    EXPECT_TRUE(is_offroad(f.objects[0].lane));
    ASSERT_TRUE(f.objects[0].pred_path);
    EXPECT_EQ(f.objects[0].pred_path->points.size(), 2u);
    ASSERT_TRUE(f.ego_pred_path);
}

TEST(Scenario, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line(std::string(kMinimal) + "location(moon, 0).\n"), 6u);
    EXPECT_EQ(error_line(std::string(kMinimal) + "self_speed(6, 0).\n"), 6u);
    EXPECT_EQ(error_line(std::string(kMinimal) + "wobble(1, 0).\n"), 6u);
    EXPECT_EQ(error_line(std::string(kMinimal) + "speed_limit(10, 3).\n"), 6u);
    EXPECT_EQ(error_line(std::string(kMinimal) + "obj_pred_path(x, [p(0,0), p(1,1)], 0).\n"), 6u);
    EXPECT_EQ(error_line(std::string(kMinimal) + "#name(late).\n"), 6u);
}

TEST(Scenario, MissingMandatoryFact) {
    std::string text = "frame(0).\nself_speed(5, 0).\nlanes([1], 0).\nintent(continue_in_lane, 0).\n";
    EXPECT_NE(error_text(text).find("missing mandatory fact self_lane/2"), std::string::npos);
    EXPECT_EQ(error_line(text), 1u);
}

TEST(Scenario, TimestampsMustBeContiguous) {
    std::string two = std::string(kMinimal) +
                      "frame(2).\nself_speed(5, 2).\nself_lane(1, 2).\nlanes([1], 2).\n"
                      "intent(continue_in_lane, 2).\n";
    EXPECT_NE(error_text(two).find("non-contiguous timestamp 2 after 0"), std::string::npos);
    auto sparse = parse_scenario("#timestamps(sparse).\n" + two);
    ASSERT_EQ(sparse.frames.size(), 2u);
    EXPECT_EQ(sparse.frames[1].timestamp, 2);
    EXPECT_TRUE(sparse.frame_at(2));
    EXPECT_FALSE(sparse.frame_at(1));
}

TEST(Scenario, FirstFrameMustBeZero) {
    EXPECT_NE(error_text("frame(1).\n").find("first frame must be 0"), std::string::npos);
}

TEST(Scenario, RulesAreNotAllowed) {
    EXPECT_NE(error_text(std::string(kMinimal) + "a :- b.\n").find("facts only"), std::string::npos);
}

TEST(Scenario, SyntaxErrorsPropagate) {
    EXPECT_THROW(parse_scenario("frame(0"), discern::logic::SyntaxError);
}

TEST(Validate, ReportsEveryViolation) {
    Frame f;
    f.lanes = {discern::logic::Term::integer(1), discern::logic::Term::integer(1)};
    f.ego_lane = discern::logic::Term::integer(3);
    f.ego_speed = -1;
    f.arrival_rank = 0;
    auto d = validate_frame(f);
    ASSERT_EQ(d.size(), 5u);
    EXPECT_EQ(d[0], "duplicate lane id 1");
    EXPECT_EQ(d[1], "ego lane 3 not in declared lanes [1,1]");
    EXPECT_NE(d[2].find("ego speed"), std::string::npos);
    EXPECT_NE(d[3].find("without an unsignalized intersection"), std::string::npos);
    EXPECT_NE(d[4].find("must be >= 1"), std::string::npos);
}

TEST(Validate, ObjectLaneMustBeDeclared) {
    EXPECT_NE(error_text(std::string(kMinimal) + "object(c1, car, 4, 10, 0, 0).\n").find("lane 4 not in declared"),
              std::string::npos);
}

TEST(Compile, FixedFactOrder) {
    auto s = parse_scenario(std::string(kMinimal) + "location(city, 0).\nspeed_limit(13.4, 0).\n"
                                                    "object(c1, car, 2, 10.0, -1.5, 0).\n"
                                                    "traffic_light(red, 0).\nsensor(left, 0.8, 0).\n");
    std::string text;
    for (const auto& f : compile_frame(s, 0)) text += f.str() + "\n";
    EXPECT_EQ(text,
              "self_speed(5,0)\n"
              "self_lane(1,0)\n"
              "lanes([1,2],0)\n"
              "speed_limit(13.4,0)\n"
              "location(city,0)\n"
              "obj(c1,0)\n"
              "class(c1,car,0)\n"
              "obj_lane(c1,2,0)\n"
              "obj_distance(c1,10,0)\n"
              "obj_rel_speed(c1,-1.5,0)\n"
              "traffic_light(red,0)\n"
              "sensor(left,0.8,0)\n"
              "intent(continue_in_lane,0)\n");
}

TEST(Compile, FactsStayInsideTheSchema) {
    auto s = parse_scenario(std::string(kMinimal) + "intersection(four_way, unsignalized, at, 0).\n"
                                                    "arrival_rank(1, 0).\ntraffic_sign(speed_limit(9), 0).\n"
                                                    "self_pred_path([p(0,0), p(0,9)], 0).\n");
    for (const auto& f : compile_frame(s, 0)) {
        EXPECT_TRUE(fact_schema().count({f.name(), f.arity()})) << f.str();
        EXPECT_EQ(f.args().back().str(), "0");
    }
}

TEST(Compile, UnknownFrameThrows) {
    auto s = parse_scenario(kMinimal);
    EXPECT_THROW(compile_frame(s, 7), ScenarioError);
}

TEST(Compile, FlashingRedIsDerivedFromHistory) {
    std::string text;
    for (int t = 0; t < 6; ++t) {
        std::string ts = std::to_string(t);
        text += "frame(" + ts + ").\nself_speed(0, " + ts + ").\nself_lane(1, " + ts + ").\nlanes([1], " + ts +
                ").\nintent(continue_in_lane, " + ts + ").\n";
        if (t % 2 == 0) text += "traffic_light(red, " + ts + ").\n";
    }
    auto s = parse_scenario(text);
    auto has_flashing = [&](int t) {
        for (const auto& f : compile_frame(s, t)) {
            if (f.str() == "traffic_light(flashing_red," + std::to_string(t) + ")") return true;
        }
        return false;
    };
    EXPECT_FALSE(has_flashing(2));
    EXPECT_TRUE(has_flashing(4));
    EXPECT_TRUE(has_flashing(5));
}

TEST(Corpus, EveryShippedScenarioParses) {
    for (const char* name : {"fig5a", "fig5b_clear", "fig5b_blocked", "fig5c", "fig6a", "fig6b",
                             "intersection_4way_rank2", "misread_speed_sign", "fig3_sensor_override"}) {
        std::ifstream in(std::string(DISCERN_CORPUS_DIR) + "/" + name + ".scn");
        ASSERT_TRUE(in) << name;
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT_NO_THROW(parse_scenario(ss.str(), name)) << name;
    }
}

}  // namespace
