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
#include <map>
#include <set>
#include <span>
#include <vector>

namespace pasp {

/// A possibility degree for every interpretation over a finite base.
///
/// Worlds are addressed by bitmask: bit i is set iff the i-th atom of the
/// (sorted) base is true. Possibility and necessity are always derived from
/// the stored degrees.
class PossibilityDistribution {
public:
    static constexpr std::size_t max_base = 20;

    /// pi == 1 everywhere (total ignorance). Throws ValidationError past max_base atoms.
    explicit PossibilityDistribution(const std::set<Atom>& base);

    const std::vector<Atom>& base() const noexcept { return base_; }
    std::size_t world_count() const noexcept { return values_.size(); }

    Weight operator()(const Interpretation& world) const { return values_[mask_of(world)]; }
    Weight at(std::uint32_t mask) const { return values_[mask]; }
    void set(const Interpretation& world, Weight w) { values_[mask_of(world)] = w; }
    void set(std::uint32_t mask, Weight w) { values_[mask] = w; }

    std::uint32_t mask_of(const Interpretation& world) const;
    Interpretation world(std::uint32_t mask) const;
    std::size_t index_of(const Atom& a) const; // LookupError when absent

    /// max{pi(I) | a not in I}.
    Weight possibility_not(const Atom& a) const;

    friend bool operator==(const PossibilityDistribution&, const PossibilityDistribution&) = default;

private:
    std::vector<Atom> base_;
    std::vector<Weight> values_;
};

/// N(a) = 1 - max{pi(I) | a not in I}. Throws LookupError for atoms outside the base.
Weight necessity(const PossibilityDistribution& pi, const Atom& a);

/// N of a conjunction via min-decomposability; 1 for the empty conjunction.
Weight necessity(const PossibilityDistribution& pi, std::span<const Atom> conjunction);

// Hypothesised value of Pi(not a) per atom.
using Guess = std::map<Atom, Weight>;

// N(head) >= min(N(body_atoms...), naf_bounds..., rule_weight).
struct NecessityConstraint {
    Atom head;
    std::vector<Atom> body_atoms;
    std::vector<Weight> naf_bounds;
    Weight rule_weight = Weight::one();

    /// The right-hand side under `pi`.
    Weight bound(const PossibilityDistribution& pi) const;
    bool satisfied_by(const PossibilityDistribution& pi) const;

    friend bool operator==(const NecessityConstraint&, const NecessityConstraint&) = default;
};

/// One constraint per rule, naf atoms replaced by their guessed values.
/// Throws LookupError when `g` lacks a naf atom.
std::vector<NecessityConstraint> constraints_of(const Program& p, const Guess& g);

/// The least specific (pointwise greatest) distribution satisfying `cs`.
///
/// Starts from pi == 1 and, until nothing changes, recomputes all necessities
/// and caps every world missing a constraint's head at 1 - bound.
PossibilityDistribution least_specific(const std::set<Atom>& base, std::span<const NecessityConstraint> cs);

/// g(a) == Pi(not a) exactly, for every a in `atoms`. False if g lacks an atom.
bool guess_consistent(const PossibilityDistribution& pi, const Guess& g, const std::set<Atom>& atoms);

struct SemanticOptions {
    std::size_t max_base = 10;
    // Refuse when 2^|base| * |grid|^|naf| exceeds this.
    std::uint64_t max_work = std::uint64_t{1} << 26;
    Execution execution = Execution::serial;
};

/// Possibilistic answer sets from the distribution semantics, by exhaustive
/// search over grid-valued guesses for the naf atoms.
std::vector<Valuation> semantic_answer_sets(const Program& p, const CertaintyScale& grid,
                                            const SemanticOptions& opts = {});

/// Classical answer sets via the distribution semantics: semantic answer sets
/// whose necessities are all 0 or 1, reported as {a | N(a) = 1}.
std::vector<Interpretation> semantic_classical_answer_sets(const Program& p, const CertaintyScale& grid,
                                                           const SemanticOptions& opts = {});

} // namespace pasp
