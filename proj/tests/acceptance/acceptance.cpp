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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact (rational weights), so no numeric tolerance applies.
// The whole run is expected to finish within time_budget.

#include <pasp/classical.hpp>
#include <pasp/cli.hpp>
#include <pasp/possdist.hpp>
#include <pasp/preduct.hpp>
#include <pasp/translate.hpp>

#include "oracles.hpp"
#include "random_programs.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace pasp;

namespace {

constexpr std::chrono::seconds time_budget{10};

Weight w(const char* s) { return Weight::parse(s); }

const char* p1_text = "1: cb.\n1: ld :- cb, not can.\n0.2: can.\n";
const char* example1 = "a.\nb :- b.\nc :- a, not b.\n";

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Check running_example() {
    Check c;
    const auto p = parse_program(p1_text);
    const Valuation expected{{"cb", Weight::one()}, {"ld", w("0.8")}, {"can", w("0.2")}};
    c.expect(enumerate_poss_answer_sets(p, certainty_scale(p)) == std::vector<Valuation>{expected},
             "direct answer sets differ");
    c.expect(baseline_answer_sets(p) == std::vector<Valuation>{{{"cb", Weight::one()}, {"can", w("0.2")}}},
             "baseline answer sets differ");
    return c;
}

Check classical_via_distributions() {
    Check c;
    const auto p = parse_program(example1);
    const auto expected = std::vector<Interpretation>{{"a", "c"}};
    c.expect(enumerate_answer_sets(p) == expected, "classical enumeration differs");
    c.expect(semantic_classical_answer_sets(p, CertaintyScale{}) == expected, "distribution route differs");
    const auto pi = least_specific(p.herbrand_base(), constraints_of(p, {{"b", Weight::one()}}));
    for (std::uint32_t m = 0; m < pi.world_count(); ++m) {
        const auto world = pi.world(m);
        const bool open = world.contains("a") && world.contains("c");
        c.expect(pi.at(m) == (open ? Weight::one() : Weight::zero()), "pi table differs");
    }
    return c;
}

Check self_blocking_rule() {
    Check c;
    const auto p = parse_program("1: a :- not a.");
    const std::vector<Valuation> expected{{{"a", w("0.5")}}};
    for (const auto& grid : {CertaintyScale{w("0.5")}, CertaintyScale::uniform(4), CertaintyScale::uniform(10)}) {
        c.expect(enumerate_poss_answer_sets(p, grid) == expected, "direct on " + grid.to_string());
        c.expect(solve_via_translation(p, grid) == expected, "translate on " + grid.to_string());
        c.expect(semantic_answer_sets(p, grid) == expected, "semantic on " + grid.to_string());
    }
    c.expect(enumerate_answer_sets(strip_weights(p)).empty(), "classical answer set found");
    const auto even = parse_program("a :- not b. b :- not a.");
    const CertaintyScale half{w("0.5")};
    const std::vector<Valuation> three{
        {{"a", w("0.5")}, {"b", w("0.5")}}, {{"a", Weight::one()}}, {{"b", Weight::one()}}};
    auto sorted = three;
    std::sort(sorted.begin(), sorted.end());
    c.expect(enumerate_poss_answer_sets(even, half) == sorted, "even loop, direct");
    c.expect(solve_via_translation(even, half) == sorted, "even loop, translate");
    c.expect(semantic_answer_sets(even, half) == sorted, "even loop, semantic");
    return c;
}

Check reduct_of_running_example() {
    Check c;
    const auto p = parse_program(p1_text);
    const Valuation v{{"cb", Weight::one()}, {"ld", w("0.8")}, {"can", w("0.2")}};
    c.expect(poss_reduct(p, v) == parse_program("1: cb. 0.8: ld :- cb. 0.2: can."), "reduct differs");
    c.expect(is_poss_answer_set(p, v), "answer set rejected");
    c.expect(!is_poss_answer_set(p, {{"cb", Weight::one()}, {"can", w("0.2")}}), "non-answer set accepted");
    return c;
}

Check simulation_of_running_example() {
    Check c;
    const auto p = parse_program(p1_text);
    const std::vector<Weight> extra{w("0.4"), w("0.6")};
    const auto t = translate(p, certainty_scale(p, extra));
    // Compare up to renaming: map every scaled atom back to (base, level).
    auto describe = [&](const PossRule& r) {
        auto name = [&](const Atom& a) {
            const auto s = t.map.lookup(a);
            return s->base + "(" + s->level.to_string() + ")";
        };
        std::string out = name(r.rule.head) + " <-";
        for (const auto& a : r.rule.pos_body) {
            out += " " + name(a);
        }
        for (const auto& a : r.rule.naf_body) {
            out += " not " + name(a);
        }
        return out;
    };
    std::multiset<std::string> got;
    for (const auto& r : t.program.rules()) {
        got.insert(describe(r));
    }
    const std::multiset<std::string> expected{
        "cb(1) <-", "cb(0.8) <-", "cb(0.6) <-", "cb(0.4) <-", "cb(0.2) <-", "can(0.2) <-",
        "ld(1) <- cb(1) not can(0.2)", "ld(0.8) <- cb(0.8) not can(0.4)", "ld(0.6) <- cb(0.6) not can(0.6)",
        "ld(0.4) <- cb(0.4) not can(0.8)", "ld(0.2) <- cb(0.2) not can(1)",
    };
    c.expect(t.program.size() == 11, "expected 11 rules, got " + std::to_string(t.program.size()));
    c.expect(got == expected, "rules differ from the expected simulation");
    const auto answers = enumerate_answer_sets(t.program);
    c.expect(answers.size() == 1 && answers.front().size() == 10, "expected one answer set with 10 atoms");
    if (answers.size() == 1) {
        c.expect(lift_back(answers.front(), t.map)
                     == Valuation{{"cb", Weight::one()}, {"ld", w("0.8")}, {"can", w("0.2")}},
                 "lift-back differs");
    }
    return c;
}

Check three_methods_agree() {
    Check c;
    std::mt19937 rng(20261016);
    const auto scales = testing::small_scales();
    int programs = 0;
    for (int i = 0; i < 600; ++i) {
        const auto& scale = scales[static_cast<std::size_t>(i) % scales.size()];
        const bool classical = i % 4 == 0;
        const auto p = testing::random_program(rng, scale, 4, 5, classical);
        const auto direct = enumerate_poss_answer_sets(p, scale);
        const auto via_translation = solve_via_translation(p, scale);
        const auto semantic = semantic_answer_sets(p, scale);
        ++programs;
        const auto text = render_program(p);
        c.expect(direct == via_translation, "direct != translate on\n" + text);
        c.expect(direct == semantic, "direct != semantic on\n" + text);
        if (classical) {
            std::vector<Interpretation> two_valued;
            for (const auto& v : direct) {
                const bool binary = std::all_of(v.entries().begin(), v.entries().end(),
                                                [](const auto& e) { return e.second.is_one(); });
                if (binary) {
                    two_valued.push_back(v.support());
                }
            }
            std::sort(two_valued.begin(), two_valued.end());
            c.expect(two_valued == testing::brute_force_answer_sets(p), "two-valued answer sets differ on\n" + text);
        }
    }
    c.detail = std::to_string(programs) + " programs" + (c.ok ? "" : "; " + c.detail);
    return c;
}

Check least_specific_models() {
    Check c;
    std::mt19937 rng(7);
    const auto scales = testing::small_scales();
    int sets = 0;
    for (int i = 0; i < 240; ++i) {
        const auto& grid = scales[static_cast<std::size_t>(i) % scales.size()];
        // The exhaustive oracle visits |grid|^(2^n) distributions.
        const std::size_t n = 1 + static_cast<std::size_t>(i) % 3;
        const auto base_v = testing::atom_pool(n);
        const std::set<Atom> base(base_v.begin(), base_v.end());
        const auto cs = testing::random_constraints(rng, base_v, grid, 4);
        const auto pi = least_specific(base, cs);
        ++sets;
        for (const auto& con : cs) {
            c.expect(con.satisfied_by(pi), "a constraint is violated");
        }
        for (std::uint32_t m = 0; m < pi.world_count(); ++m) {
            if (const auto above = grid.next_above(pi.at(m))) {
                auto raised = pi;
                raised.set(m, *above);
                c.expect(!std::all_of(cs.begin(), cs.end(), [&](const auto& k) { return k.satisfied_by(raised); }),
                         "not maximal");
            }
        }
        const auto best = testing::IndexedConstraints(base_v, grid, cs).max_model();
        for (std::uint32_t m = 0; m < pi.world_count(); ++m) {
            c.expect(pi.at(m) == grid[best[m]], "differs from the exhaustive maximum");
        }
    }
    c.detail = std::to_string(sets) + " constraint sets" + (c.ok ? "" : "; " + c.detail);
    return c;
}

Check deterministic_output() {
    Check c;
    const std::string dir = PASP_CORPUS_DIR;
    int runs = 0;
    for (const char* file : {"p1.pasp", "example1.pasp", "self_block.pasp", "even_loop.pasp", "definite.pasp",
                             "mixed.pasp"}) {
        const auto path = dir + "/" + file;
        const std::vector<std::vector<std::string>> commands{
            {"solve", path, "--format", "json"},
            {"solve", path, "--format", "json", "--parallel"},
            {"solve", path, "--method", "semantic", "--format", "json"},
            {"compile", path, "--format", "json"},
            {"check", path, "", "--format", "json"},
            {"compare", path, "--format", "json"},
        };
        for (const auto& args : commands) {
            std::ostringstream o1, e1, o2, e2;
            const int r1 = cli::run(args, o1, e1);
            const int r2 = cli::run(args, o2, e2);
            ++runs;
            c.expect(r1 == r2 && o1.str() == o2.str() && !o1.str().empty(), args[0] + " " + file + " not stable");
        }
    }
    c.detail = std::to_string(runs) + " command pairs" + (c.ok ? "" : "; " + c.detail);
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"running example: direct and baseline answer sets", running_example},
        {"classical answer sets via least specific distributions", classical_via_distributions},
        {"self-blocking rule and even loop across methods", self_blocking_rule},
        {"reduct and answer-set check on the running example", reduct_of_running_example},
        {"simulation of the running example on a six-point scale", simulation_of_running_example},
        {"direct, translate and semantic agree on random programs", three_methods_agree},
        {"least specific distributions on random constraint sets", least_specific_models},
        {"byte-identical JSON output across repeated runs", deterministic_output},
    };
    const auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        }
        catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        failures += c.ok ? 0 : 1;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!c.detail.empty()) {
            std::cout << " (" << c.detail << ")";
        }
        std::cout << '\n';
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    const bool in_time = elapsed < time_budget;
    std::cout << (in_time ? "PASS" : "FAIL") << " time budget: " << elapsed.count() << " s of "
              << time_budget.count() << " s\n";
    return failures == 0 && in_time ? 0 : 1;
}
