/*
 *  Copyright (C) 2026  The pasp authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <catch_amalgamated.hpp>

#include <pasp/error.hpp>
#include <pasp/preduct.hpp>
#include <pasp/translate.hpp>

#include "random_programs.hpp"

#include <random>

using namespace pasp;

namespace {

Weight w(const char* s) { return Weight::parse(s); }

const char* p1_text = "1: cb.\n1: ld :- cb, not can.\n0.2: can.\n";

std::set<std::string> rendered_rules(const Program& p) {
    std::set<std::string> out;
    for (const auto& r : p.rules()) {
        out.insert(render_rule(r, WeightStyle::omitted));
    }
    return out;
}

const std::vector<Weight> fifths{w("0.4"), w("0.6")};

} // namespace

TEST_CASE("certainty scales from programs", "[translate]") {
    const auto p = parse_program(p1_text);
    CHECK(certainty_scale(p).to_string() == "{0, 0.2, 0.8, 1}");
    CHECK(certainty_scale(p, fifths).to_string() == "{0, 0.2, 0.4, 0.6, 0.8, 1}");
    CHECK(certainty_scale(Program{}).to_string() == "{0, 1}");
    CHECK(certainty_scale(parse_program("0.3: a.")).to_string() == "{0, 0.3, 0.7, 1}");
}

TEST_CASE("the running example on the six-point scale", "[translate]") {
    const auto p = parse_program(p1_text);
    const auto t = translate(p, certainty_scale(p, fifths));
    CHECK(t.program.size() == 11);
    CHECK(t.program.is_classical());
    const std::set<std::string> expected{
        "cb__5.", "cb__4.", "cb__3.", "cb__2.", "cb__1.", "can__1.",
        "ld__5 :- cb__5, not can__1.", "ld__4 :- cb__4, not can__2.", "ld__3 :- cb__3, not can__3.",
        "ld__2 :- cb__2, not can__4.", "ld__1 :- cb__1, not can__5.",
    };
    CHECK(rendered_rules(t.program) == expected);
    CHECK(t.map.size() == 15);
    CHECK(t.map.lookup("ld__4") == ScaledAtom{"ld", w("0.8"), 4});
    CHECK_FALSE(t.map.lookup("ld__0"));
    CHECK_FALSE(t.map.lookup("ld"));

    const auto answers = enumerate_answer_sets(t.program);
    REQUIRE(answers.size() == 1);
    const auto& m = answers.front();
    CHECK(m.size() == 10);
    CHECK(m == Interpretation{"cb__1", "cb__2", "cb__3", "cb__4", "cb__5", "ld__1", "ld__2", "ld__3", "ld__4",
                              "can__1"});
    CHECK(lift_back(m, t.map) == Valuation{{"cb", Weight::one()}, {"ld", w("0.8")}, {"can", w("0.2")}});
}

TEST_CASE("rules are emitted from the top level down", "[translate]") {
    const auto t = translate(parse_program("0.8: a :- b."), CertaintyScale{w("0.2")});
    CHECK(render_program(t.program, WeightStyle::omitted) == "a__2 :- b__2.\na__1 :- b__1.\n");
}

TEST_CASE("the self-blocking rule", "[translate]") {
    const auto p = parse_program("1: a :- not a.");
    const CertaintyScale half{w("0.5")};
    const auto t = translate(p, half);
    CHECK(render_program(t.program, WeightStyle::omitted) == "a__2 :- not a__1.\na__1 :- not a__2.\n");
    // The image has a non-closed answer set; only the closed one lifts to an answer set.
    CHECK(enumerate_answer_sets(t.program) == std::vector<Interpretation>{{"a__1"}, {"a__2"}});
    CHECK_FALSE(is_downward_closed({"a__2"}, t.map));
    CHECK(solve_via_translation(p, half) == std::vector<Valuation>{{{"a", w("0.5")}}});
    CHECK(solve_via_translation(p, CertaintyScale{}).empty());
}

TEST_CASE("level closure makes every answer set downward closed", "[translate]") {
    const auto p = parse_program("1: a :- not a.");
    TranslateOptions closure;
    closure.level_closure = true;
    const auto t = translate(p, CertaintyScale{w("0.5")}, closure);
    CHECK(t.program.size() == 3);
    CHECK(enumerate_answer_sets(t.program) == std::vector<Interpretation>{{"a__1"}});
}

TEST_CASE("projection and lifting", "[translate]") {
    const SimulationMap map({"a", "b"}, CertaintyScale{w("0.2")});
    CHECK(map.size() == 6);
    CHECK(project({{"a", w("0.8")}}, map) == Interpretation{"a__1", "a__2"});
    CHECK(project({}, map).empty());
    CHECK(lift_back({"a__1", "a__2", "b__3"}, map) == Valuation{{"a", w("0.8")}, {"b", Weight::one()}});
    CHECK(lift_back({}, map).empty());
    CHECK_THROWS_AS(project({{"a", w("0.5")}}, map), ScaleError);
    CHECK_THROWS_AS(project({{"z", Weight::one()}}, map), LookupError);
    CHECK_THROWS_AS(lift_back({"a"}, map), LookupError);
    CHECK_THROWS_AS(map.scaled_name("a", Weight::zero()), ScaleError);
    CHECK(map.render().substr(0, 11) == "a__1\ta\t0.2\n");
}

TEST_CASE("translation errors", "[translate][errors]") {
    CHECK_THROWS_AS(translate(parse_program(p1_text), CertaintyScale{w("0.5")}), ScaleError);
    CHECK_THROWS_AS(translate(parse_program("a__1 :- b."), CertaintyScale{}), ValidationError);
    CHECK(looks_scaled("x__12"));
    CHECK_FALSE(looks_scaled("x__"));
    CHECK_FALSE(looks_scaled("x__a"));
    CHECK_FALSE(looks_scaled("x_1"));
    CHECK(translate(parse_program("a__b :- c."), CertaintyScale{}).program.size() == 1);
}

TEST_CASE("the empty program translates to the empty program", "[translate]") {
    const auto t = translate(Program{}, CertaintyScale{});
    CHECK(t.program.empty());
    CHECK(t.map.size() == 0);
    CHECK(solve_via_translation(Program{}, CertaintyScale{}) == std::vector<Valuation>{{}});
}

TEST_CASE("translation size", "[translate][property]") {
    std::mt19937 rng(73);
    for (const auto& scale : testing::small_scales()) {
        for (int i = 0; i < 40; ++i) {
            const auto p = testing::random_program(rng, scale, 5, 6, false);
            const auto t = translate(p, scale);
            std::size_t expected = 0;
            for (const auto& r : p.rules()) {
                for (std::size_t k = 1; k < scale.size(); ++k) {
                    expected += scale[k] <= r.weight ? 1 : 0;
                }
            }
            CHECK(t.program.size() == expected);
            CHECK(t.map.size() == p.herbrand_base().size() * (scale.size() - 1));
        }
    }
}

TEST_CASE("project and lift_back are inverse on on-scale valuations", "[translate][property]") {
    std::mt19937 rng(79);
    for (const auto& scale : testing::small_scales()) {
        const auto atoms = testing::atom_pool(4);
        const SimulationMap map({atoms.begin(), atoms.end()}, scale);
        std::uniform_int_distribution<std::size_t> level(0, scale.size() - 1);
        for (int i = 0; i < 50; ++i) {
            Valuation v;
            for (const auto& a : atoms) {
                v.set(a, scale[level(rng)]);
            }
            const auto m = project(v, map);
            CHECK(is_downward_closed(m, map));
            CHECK(lift_back(m, map) == v);
        }
    }
}

TEST_CASE("closed answer sets of the image are exactly the answer sets", "[translate][property]") {
    std::mt19937 rng(83);
    TranslateOptions closure;
    closure.level_closure = true;
    for (const auto& scale : testing::small_scales()) {
        for (int i = 0; i < 40; ++i) {
            const auto p = testing::random_program(rng, scale, 4, 5, false);
            const auto direct = enumerate_poss_answer_sets(p, scale);
            CHECK(solve_via_translation(p, scale) == direct);

            const auto t = translate(p, scale);
            for (const auto& v : direct) {
                CHECK(is_answer_set(t.program, project(v, t.map)));
            }
            const auto closed = translate(p, scale, closure);
            std::vector<Valuation> lifted;
            for (const auto& m : enumerate_answer_sets(t.program)) {
                if (is_downward_closed(m, t.map)) {
                    CHECK(project(lift_back(m, t.map), t.map) == m);
                }
            }
            for (const auto& m : enumerate_answer_sets(closed.program)) {
                CHECK(is_downward_closed(m, closed.map));
                CHECK(project(lift_back(m, closed.map), closed.map) == m);
                lifted.push_back(lift_back(m, closed.map));
            }
            std::sort(lifted.begin(), lifted.end());
            CHECK(lifted == direct);
        }
    }
}
