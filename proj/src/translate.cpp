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

#include <pasp/translate.hpp>

#include <pasp/error.hpp>

#include <algorithm>
#include <cctype>

namespace pasp {

CertaintyScale certainty_scale(const Program& p, std::span<const Weight> extra) {
    std::vector<Weight> values(extra.begin(), extra.end());
    for (const auto& r : p.rules()) {
        values.push_back(r.weight);
    }
    return CertaintyScale(values);
}

Atom scaled_atom_name(const Atom& base, std::size_t level_index) { return base + "__" + std::to_string(level_index); }

bool looks_scaled(const Atom& name) {
    const auto pos = name.rfind("__");
    if (pos == Atom::npos || pos + 2 == name.size()) {
        return false;
    }
    return std::all_of(name.begin() + static_cast<std::ptrdiff_t>(pos) + 2, name.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

SimulationMap::SimulationMap(const std::set<Atom>& base, CertaintyScale scale) : base_(base), scale_(std::move(scale)) {
    for (const auto& a : base_) {
        for (std::size_t i = 1; i < scale_.size(); ++i) {
            auto name = scaled_atom_name(a, i);
            forward_.emplace(std::make_pair(a, i), name);
            reverse_.emplace(std::move(name), ScaledAtom{a, scale_[i], i});
        }
    }
}

const Atom& SimulationMap::scaled_name(const Atom& a, Weight level) const {
    const auto idx = scale_.index_of(level);
    if (!idx) {
        throw ScaleError("level " + level.to_string() + " is not on the scale " + scale_.to_string());
    }
    if (*idx == 0) {
        throw ScaleError("level 0 has no scaled atom");
    }
    auto it = forward_.find({a, *idx});
    if (it == forward_.end()) {
        throw LookupError("atom '" + a + "' is not in the simulation map");
    }
    return it->second;
}

std::optional<ScaledAtom> SimulationMap::lookup(const Atom& scaled) const {
    auto it = reverse_.find(scaled);
    if (it == reverse_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string SimulationMap::render() const {
    std::string out;
    for (const auto& [key, name] : forward_) {
        out += name;
        out += '\t';
        out += key.first;
        out += '\t';
        out += scale_[key.second].to_string();
        out += '\n';
    }
    return out;
}

Translation translate(const Program& p, const CertaintyScale& scale, const TranslateOptions& opts) {
    require_weights_on_scale(p, scale);
    for (const auto& a : p.herbrand_base()) {
        if (looks_scaled(a)) {
            throw ValidationError("atom '" + a + "' collides with generated scaled atom names (\"<atom>__<n>\")");
        }
    }
    Translation out{Program{}, SimulationMap(p.herbrand_base(), scale)};
    const auto& map = out.map;
    std::vector<PossRule> rules;
    for (const auto& r : p.rules()) {
        // Levels in descending order: head@1 first.
        for (std::size_t i = scale.size() - 1; i >= 1; --i) {
            const auto level = scale[i];
            if (level > r.weight) {
                continue;
            }
            const auto naf_level = *scale.next_above(level.complement());
            Rule q;
            q.head = map.scaled_name(r.rule.head, level);
            for (const auto& a : r.rule.pos_body) {
                q.pos_body.push_back(map.scaled_name(a, level));
            }
            for (const auto& a : r.rule.naf_body) {
                q.naf_body.push_back(map.scaled_name(a, naf_level));
            }
            rules.push_back({std::move(q), Weight::one()});
        }
    }
    if (opts.level_closure) {
        for (const auto& a : map.base()) {
            for (std::size_t i = scale.size() - 1; i >= 2; --i) {
                Rule q{map.scaled_name(a, scale[i - 1]), {map.scaled_name(a, scale[i])}, {}};
                rules.push_back({std::move(q), Weight::one()});
            }
        }
    }
    out.program = Program(std::move(rules));
    return out;
}

Valuation lift_back(const Interpretation& m, const SimulationMap& map) {
    Valuation v;
    for (const auto& name : m) {
        const auto s = map.lookup(name);
        if (!s) {
            throw LookupError("atom '" + name + "' is not a scaled atom of this translation");
        }
        if (s->level > v[s->base]) {
            v.set(s->base, s->level);
        }
    }
    return v;
}

Interpretation project(const Valuation& v, const SimulationMap& map) {
    Interpretation out;
    for (const auto& [a, w] : v.entries()) {
        if (!map.base().contains(a)) {
            throw LookupError("atom '" + a + "' is not in the simulation map");
        }
        if (!map.scale().contains(w)) {
            throw ScaleError("value " + a + "=" + w.to_string() + " is not on the scale " + map.scale().to_string()
                             + "; only answer sets with on-scale values have a classical counterpart");
        }
        for (std::size_t i = 1; i < map.scale().size() && map.scale()[i] <= w; ++i) {
            out.insert(map.scaled_name(a, map.scale()[i]));
        }
    }
    return out;
}

bool is_downward_closed(const Interpretation& m, const SimulationMap& map) {
    for (const auto& name : m) {
        const auto s = map.lookup(name);
        if (!s) {
            throw LookupError("atom '" + name + "' is not a scaled atom of this translation");
        }
        for (std::size_t i = 1; i < s->level_index; ++i) {
            if (!m.contains(scaled_atom_name(s->base, i))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Valuation> solve_via_translation(const Program& p, const CertaintyScale& scale,
                                             const EnumerateOptions& opts) {
    const auto t = translate(p, scale);
    std::vector<Valuation> out;
    for (const auto& m : enumerate_answer_sets(t.program, opts)) {
        if (is_downward_closed(m, t.map)) {
            out.push_back(lift_back(m, t.map));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace pasp
