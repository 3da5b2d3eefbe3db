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

#include <pasp/execution.hpp>
#include <pasp/syntax.hpp>

#include <cstddef>
#include <set>
#include <vector>

namespace pasp {

// A set of atoms; a classical possible world.
using Interpretation = std::set<Atom>;

/// Same rules with every weight replaced by 1.
Program strip_weights(const Program& p);

/// Gelfond-Lifschitz reduct: drops rules whose naf body meets `i`, strips naf from the rest.
/// Requires a classical (all weights 1) program.
Program gl_reduct(const Program& p, const Interpretation& i);

/// Least fixpoint of the immediate-consequence operator from the empty set.
/// Throws PreconditionError if `p` contains naf.
Interpretation least_model(const Program& p);

bool is_answer_set(const Program& p, const Interpretation& i);

struct EnumerateOptions {
    // Refuse (GuardError) when the program has more naf atoms than this.
    std::size_t max_naf_atoms = 20;
    Execution execution = Execution::serial;
};

/// All answer sets of a classical program, in lexicographic order.
///
/// Guesses which naf atoms are in the answer set, computes the least model of
/// the reduct under that guess and keeps it when it reproduces the guess.
std::vector<Interpretation> enumerate_answer_sets(const Program& p, const EnumerateOptions& opts = {});

} // namespace pasp
