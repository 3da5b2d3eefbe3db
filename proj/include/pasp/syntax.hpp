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

#include <pasp/weight.hpp>

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pasp {

// A propositional atom. Truth (the empty body) is never an Atom.
using Atom = std::string;

/// True iff `name` is a legal atom: [a-z][A-Za-z0-9_]*, and not the keyword "not".
bool is_valid_atom(std::string_view name);

// head :- pos_body, not naf_body.
struct Rule {
    Atom head;
    std::vector<Atom> pos_body;
    std::vector<Atom> naf_body;

    bool is_fact() const noexcept { return pos_body.empty() && naf_body.empty(); }
    bool is_definite() const noexcept { return naf_body.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
};

// A rule paired with its certainty n(r).
struct PossRule {
    Rule rule;
    Weight weight = Weight::one();

    friend bool operator==(const PossRule&, const PossRule&) = default;
};

enum class ProgramKind { definite, normal };

/// An ordered list of weighted rules.
///
/// Construction validates every rule: atom names are legal, no body part
/// repeats an atom, and every weight is in (0,1]. Programs are immutable
/// values afterwards.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<PossRule> rules);

    std::span<const PossRule> rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    ProgramKind kind() const noexcept { return kind_; }
    bool is_definite() const noexcept { return kind_ == ProgramKind::definite; }

    /// True iff every rule has weight 1.
    bool is_classical() const noexcept;

    /// All atoms occurring anywhere in the program.
    std::set<Atom> herbrand_base() const;

    friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }

private:
    std::vector<PossRule> rules_;
    ProgramKind kind_ = ProgramKind::definite;
};

/// Parses .pasp text. Unweighted statements get weight 1; rule order is kept.
/// Throws ParseError with the 1-based line/column of the offending token.
Program parse_program(std::string_view text);

enum class WeightStyle { explicit_weights, omitted };

/// One statement per line, e.g. "0.2: can." or "1: ld :- cb, not can.".
/// With WeightStyle::omitted the output is plain ASP (requires weight-1 rules).
std::string render_program(const Program& p, WeightStyle style = WeightStyle::explicit_weights);

std::string render_rule(const PossRule& r, WeightStyle style = WeightStyle::explicit_weights);

/// Atoms occurring in some naf body.
std::set<Atom> naf_atoms(const Program& p);

} // namespace pasp
