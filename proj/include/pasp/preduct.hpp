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

#include <pasp/classical.hpp>
#include <pasp/execution.hpp>
#include <pasp/syntax.hpp>
#include <pasp/valuation.hpp>

#include <cstdint>
#include <set>
#include <vector>

namespace pasp {

enum class CutKind {
    at_least,       // {a | V(a) >= c}
    strictly_above, // {a | V(a) > c}
};

/// Threshold cut of `v` over the atoms of `universe`.
Interpretation cut(const Valuation& v, Weight c, CutKind kind, const std::set<Atom>& universe);

/// Rules with weight >= c.
Program c_cut(const Program& p, Weight c);

/// One application of the possibilistic immediate-consequence operator.
///
/// Each atom keeps its current value and is raised to min(n(r), body values)
/// for every rule deriving it. Throws PreconditionError on naf.
Valuation poss_step(const Program& p, const Valuation& v);

/// Iterates poss_step from the all-zero valuation to its fixpoint.
Valuation poss_least_fixpoint(const Program& p);

/// The certainty with which a rule's naf body is unblocked under `v`:
/// 1 - max over naf atoms of v, and 1 for an empty naf body.
Weight naf_allowance(const Rule& r, const Valuation& v);

/// Weight-attenuating reduct. Every rule becomes (head :- pos_body) with weight
/// min(n(r), naf_allowance(r, v)); rules whose new weight is 0 are dropped.
Program poss_reduct(const Program& p, const Valuation& v);

/// V is a possibilistic answer set iff it is the least fixpoint of its own reduct.
bool is_poss_answer_set(const Program& p, const Valuation& v);

struct DirectOptions {
    // Refuse when |grid|^|naf atoms| exceeds this many guesses.
    std::uint64_t max_candidates = 1'000'000;
    Execution execution = Execution::serial;
};

/// All grid-valued possibilistic answer sets, sorted.
///
/// Assigns grid values to the naf atoms, builds the reduct for that guess,
/// and keeps its fixpoint when the fixpoint reproduces the guess.
/// Requires every rule weight on `grid` (ScaleError otherwise).
std::vector<Valuation> enumerate_poss_answer_sets(const Program& p, const CertaintyScale& grid,
                                                  const DirectOptions& opts = {});

/// The earlier reduct w.r.t. a set of atoms: rules blocked by `a` are dropped,
/// weights of the survivors are kept unchanged.
Program baseline_reduct(const Program& p, const Interpretation& a);

/// Answer sets under the earlier semantics: classical answer sets of the
/// unweighted program, then certainties from the fixpoint of baseline_reduct.
std::vector<Valuation> baseline_answer_sets(const Program& p, const EnumerateOptions& opts = {});

} // namespace pasp
