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

// Dense, integer-indexed view of a Program used by the search kernels.

#include <pasp/syntax.hpp>
#include <pasp/weight.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace pasp::detail {

using AtomId = std::uint32_t;

struct IndexedRule {
    AtomId head;
    std::vector<AtomId> pos;
    std::vector<AtomId> naf;
    Weight weight;
};

struct IndexedProgram {
    explicit IndexedProgram(const Program& p);

    // Throws LookupError for atoms outside the Herbrand base.
    AtomId id(const Atom& a) const;

    std::vector<Atom> atoms;      // sorted Herbrand base; AtomId indexes into it
    std::vector<IndexedRule> rules;
    std::vector<AtomId> naf;      // sorted ids of atoms under naf
};

// Classical least model of the enabled rules, naf ignored.
// Counter-based propagation, linear in program size per call.
class LeastModelEngine {
public:
    explicit LeastModelEngine(const IndexedProgram& p);

    // enabled[r] != 0 keeps rule r. The returned flags are valid until the next call.
    const std::vector<char>& compute(std::span<const char> enabled);

private:
    const IndexedProgram* prog_;
    std::vector<std::vector<std::uint32_t>> watch_; // atom -> rules with it in the positive body
    std::vector<std::uint32_t> missing_;
    std::vector<char> model_;
    std::vector<AtomId> queue_;
};

// Least fixpoint of a possibilistic definite program with per-rule weights
// (0 = rule absent). Processes atoms in decreasing certainty, so every value
// is final the moment it leaves the heap.
class PossFixpointEngine {
public:
    explicit PossFixpointEngine(const IndexedProgram& p);

    const std::vector<Weight>& compute(std::span<const Weight> rule_weights);

private:
    const IndexedProgram* prog_;
    std::vector<std::vector<std::uint32_t>> watch_;
    std::vector<std::uint32_t> missing_;
    std::vector<Weight> value_;
    std::vector<char> done_;
    std::vector<std::pair<Weight, AtomId>> heap_;
};

} // namespace pasp::detail
