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

#pragma once

#include <pasp/syntax.hpp>
#include <pasp/valuation.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pasp::cli {

enum ExitCode : int {
    exit_ok = 0,          // success / at least one answer set
    exit_no_answer = 1,   // no answer set (or check verdict false, or compare disagreement)
    exit_input_error = 2, // usage, parse or I/O error
    exit_guard = 3,       // a resource guard tripped
};

/// Resolves a --grid / --scale value against a program:
///   "auto"        closure of the rule weights (plus 1/2 when `with_half`)
///   "uniform:K"   multiples of 1/K, unioned with auto
///   "list:v,..."  or a bare "v,...": exactly those values, closed under 1-x
/// Throws ValidationError on malformed specs, ScaleError when a list misses a rule weight.
CertaintyScale resolve_grid(std::string_view spec, const Program& p, bool with_half);

/// Parses "a=1,b=0.8"; values may be decimals or fractions. Empty text is the all-zero valuation.
Valuation parse_valuation(std::string_view text);

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pasp::cli
