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
#include <pasp/syntax.hpp>
#include <pasp/valuation.hpp>

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pasp {

/// Closure of the rule weights, 0, 1 and `extra` under x -> 1-x.
CertaintyScale certainty_scale(const Program& p, std::span<const Weight> extra = {});

// The fresh classical atom standing for "base holds with certainty at least level".
struct ScaledAtom {
    Atom base;
    Weight level;
    std::size_t level_index = 0; // position of level in the sorted scale

    friend bool operator==(const ScaledAtom&, const ScaledAtom&) = default;
};

/// Name of the scaled atom: base + "__" + level index, e.g. "can__1".
Atom scaled_atom_name(const Atom& base, std::size_t level_index);

/// True if `name` has the shape of a scaled atom name (ends in "__" + digits).
bool looks_scaled(const Atom& name);

/// Bookkeeping between source atoms and scaled atoms: total over
/// base x (scale \ {0}) and injective.
class SimulationMap {
public:
    SimulationMap() = default;
    SimulationMap(const std::set<Atom>& base, CertaintyScale scale);

    const CertaintyScale& scale() const noexcept { return scale_; }
    const std::set<Atom>& base() const noexcept { return base_; }

    /// Throws LookupError / ScaleError for unknown atoms or off-scale / zero levels.
    const Atom& scaled_name(const Atom& a, Weight level) const;

    std::optional<ScaledAtom> lookup(const Atom& scaled) const;

    std::size_t size() const noexcept { return reverse_.size(); }

    /// Sidecar text: one "scaled-name TAB base-name TAB level" line per scaled
    /// atom, ordered by base atom and then ascending level.
    std::string render() const;

private:
    std::set<Atom> base_;
    CertaintyScale scale_;
    std::map<std::pair<Atom, std::size_t>, Atom> forward_;
    std::map<Atom, ScaledAtom> reverse_;
};

struct Translation {
    Program program; // classical, all weights 1
    SimulationMap map;
};

struct TranslateOptions {
    // Also emit a@c :- a@c' for consecutive levels c < c', so that every
    // classical answer set is downward closed. Without these rules the image
    // can have non-closed answer sets (e.g. {a@1} for "1: a :- not a."),
    // which do not correspond to possibilistic answer sets.
    bool level_closure = false;
};

/// Compiles `p` into a classical program over scaled atoms.
///
/// For each rule of weight w and each level c' in (0, w] on the scale:
///   head@c' :- pos@c', not naf@c''   with c'' = min{d in scale | d > 1 - c'}.
/// Throws ScaleError if a rule weight is missing from the scale and
/// ValidationError if a source atom could collide with scaled names.
Translation translate(const Program& p, const CertaintyScale& scale, const TranslateOptions& opts = {});

/// True iff a@c in m implies a@c' in m for every scale level 0 < c' < c.
bool is_downward_closed(const Interpretation& m, const SimulationMap& map);

/// V(a) = max{c | a@c in m}. Throws LookupError for atoms outside the map.
Valuation lift_back(const Interpretation& m, const SimulationMap& map);

/// {a@c | 0 < c <= V(a)}. Throws ScaleError for off-scale values, LookupError for unknown atoms.
Interpretation project(const Valuation& v, const SimulationMap& map);

/// Translate, enumerate classical answer sets, keep the downward-closed ones
/// and lift them back.
std::vector<Valuation> solve_via_translation(const Program& p, const CertaintyScale& scale,
                                             const EnumerateOptions& opts = {});

} // namespace pasp
