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

// Serial reference vs OpenMP guess search on synthetic even-loop programs.
//
//   pasp_bench [pairs]
//
// Each workload runs once per execution mode; results must match exactly.

#include <pasp/classical.hpp>
#include <pasp/possdist.hpp>
#include <pasp/preduct.hpp>
#include <pasp/syntax.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

namespace {

// k pairs "a_i :- not b_i. b_i :- not a_i." chained by "c_i :- a_i, c_{i-1}."
std::string even_loops(int pairs, bool weighted) {
    std::string text;
    for (int i = 0; i < pairs; ++i) {
        const auto n = std::to_string(i);
        const std::string w = weighted ? (i % 2 ? "0.7: " : "0.3: ") : "";
        text += w + "a" + n + " :- not b" + n + ".\n";
        text += "b" + n + " :- not a" + n + ".\n";
        text += "c" + n + " :- a" + n + (i ? ", c" + std::to_string(i - 1) : std::string()) + ".\n";
    }
    return text;
}

template <class F>
double time_ms(F&& f, std::size_t& result_count) {
    const auto start = std::chrono::steady_clock::now();
    result_count = f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool report(const char* name, const std::function<std::size_t(pasp::Execution)>& run) {
    std::size_t serial_n = 0;
    std::size_t parallel_n = 0;
    const double serial = time_ms([&] { return run(pasp::Execution::serial); }, serial_n);
    const double parallel = time_ms([&] { return run(pasp::Execution::parallel); }, parallel_n);
    std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  answers %zu%s\n", name, serial, parallel,
                serial / parallel, serial_n, serial_n == parallel_n ? "" : "  MISMATCH");
    std::fflush(stdout);
    return serial_n == parallel_n;
}

} // namespace

int main(int argc, char** argv) {
    // Classical chains use `pairs` loops; the direct and semantic searches use fewer,
    // since their guess spaces grow as 4^(2n) on the four-point grid.
    const int pairs = argc > 1 ? std::atoi(argv[1]) : 10;
    std::printf("openmp: %s\n", pasp::parallel_available() ? "yes" : "no");
    std::fflush(stdout);

    const auto classical = pasp::parse_program(even_loops(pairs, false));
    const auto weighted = pasp::parse_program(even_loops(std::min(pairs, 5), true));
    const auto grid = pasp::CertaintyScale{pasp::Weight::parse("0.3")};
    const auto small = pasp::parse_program(even_loops(std::min(pairs, 3), true));

    bool ok = true;
    ok &= report("classical enumeration", [&](pasp::Execution e) {
        pasp::EnumerateOptions o;
        o.max_naf_atoms = 2 * static_cast<std::size_t>(pairs);
        o.execution = e;
        return pasp::enumerate_answer_sets(classical, o).size();
    });
    ok &= report("direct (possibilistic reduct)", [&](pasp::Execution e) {
        pasp::DirectOptions o;
        o.max_candidates = ~std::uint64_t{0};
        o.execution = e;
        return pasp::enumerate_poss_answer_sets(weighted, grid, o).size();
    });
    ok &= report("semantic (distributions)", [&](pasp::Execution e) {
        pasp::SemanticOptions o;
        o.execution = e;
        return pasp::semantic_answer_sets(small, grid, o).size();
    });
    return ok ? 0 : 1;
}
