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

#include <pasp/possdist.hpp>

#include <pasp/error.hpp>

#include "kernels/guess_search.hpp"
#include "kernels/indexed_program.hpp"

#include <algorithm>

namespace pasp {

PossibilityDistribution::PossibilityDistribution(const std::set<Atom>& base) : base_(base.begin(), base.end()) {
    if (base_.size() > max_base) {
        throw ValidationError("a possibility distribution over " + std::to_string(base_.size())
                              + " atoms is too large (limit " + std::to_string(max_base) + ")");
    }
    values_.assign(std::size_t{1} << base_.size(), Weight::one());
}

std::size_t PossibilityDistribution::index_of(const Atom& a) const {
    auto it = std::lower_bound(base_.begin(), base_.end(), a);
    if (it == base_.end() || *it != a) {
        throw LookupError("atom '" + a + "' is not in the base of the distribution");
    }
    return static_cast<std::size_t>(it - base_.begin());
}

std::uint32_t PossibilityDistribution::mask_of(const Interpretation& world) const {
    std::uint32_t mask = 0;
    for (const auto& a : world) {
        mask |= std::uint32_t{1} << index_of(a);
    }
    return mask;
}

Interpretation PossibilityDistribution::world(std::uint32_t mask) const {
    Interpretation out;
    for (std::size_t i = 0; i < base_.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) {
            out.insert(out.end(), base_[i]);
        }
    }
    return out;
}

Weight PossibilityDistribution::possibility_not(const Atom& a) const {
    const auto bit = std::uint32_t{1} << index_of(a);
    Weight best = Weight::zero();
    for (std::uint32_t m = 0; m < values_.size(); ++m) {
        if (!(m & bit)) {
            best = std::max(best, values_[m]);
        }
    }
    return best;
}

Weight necessity(const PossibilityDistribution& pi, const Atom& a) { return pi.possibility_not(a).complement(); }

Weight necessity(const PossibilityDistribution& pi, std::span<const Atom> conjunction) {
    Weight n = Weight::one();
    for (const auto& a : conjunction) {
        n = std::min(n, necessity(pi, a));
    }
    return n;
}

Weight NecessityConstraint::bound(const PossibilityDistribution& pi) const {
    Weight b = rule_weight;
    for (const auto& w : naf_bounds) {
        b = std::min(b, w);
    }
    return std::min(b, necessity(pi, body_atoms));
}

bool NecessityConstraint::satisfied_by(const PossibilityDistribution& pi) const {
    return necessity(pi, head) >= bound(pi);
}

std::vector<NecessityConstraint> constraints_of(const Program& p, const Guess& g) {
    std::vector<NecessityConstraint> out;
    out.reserve(p.size());
    for (const auto& r : p.rules()) {
        NecessityConstraint c{r.rule.head, r.rule.pos_body, {}, r.weight};
        for (const auto& a : r.rule.naf_body) {
            auto it = g.find(a);
            if (it == g.end()) {
                throw LookupError("guess has no value for naf atom '" + a + "'");
            }
            c.naf_bounds.push_back(it->second);
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// A constraint over atom indices with the naf bounds and rule weight folded into one cap.
struct DenseConstraint {
    std::size_t head;
    std::vector<std::size_t> body;
    Weight cap;
};

// Greatest-fixpoint contraction over worlds encoded as bitmasks.
// `pi` must start at the top element (all 1); `poss_not` is scratch of size nbase.
void contract(std::size_t nbase, std::span<const DenseConstraint> cs, std::vector<Weight>& pi,
              std::vector<Weight>& poss_not) {
    const auto worlds = static_cast<std::uint32_t>(pi.size());
    for (bool changed = true; changed;) {
        changed = false;
        std::fill(poss_not.begin(), poss_not.end(), Weight::zero());
        for (std::uint32_t m = 0; m < worlds; ++m) {
            for (std::size_t i = 0; i < nbase; ++i) {
                if (!(m & (std::uint32_t{1} << i)) && pi[m] > poss_not[i]) {
                    poss_not[i] = pi[m];
                }
            }
        }
        for (const auto& c : cs) {
            Weight b = c.cap;
            for (auto a : c.body) {
                b = std::min(b, poss_not[a].complement());
            }
            if (b.is_zero()) {
                continue;
            }
            const auto limit = b.complement();
            const auto bit = std::uint32_t{1} << c.head;
            for (std::uint32_t m = 0; m < worlds; ++m) {
                if (!(m & bit) && pi[m] > limit) {
                    pi[m] = limit;
                    changed = true;
                }
            }
        }
    }
}

} // namespace

PossibilityDistribution least_specific(const std::set<Atom>& base, std::span<const NecessityConstraint> cs) {
    PossibilityDistribution pi(base);
    std::vector<DenseConstraint> dense;
    dense.reserve(cs.size());
    for (const auto& c : cs) {
        DenseConstraint d{pi.index_of(c.head), {}, c.rule_weight};
        for (const auto& a : c.body_atoms) {
            d.body.push_back(pi.index_of(a));
        }
        for (const auto& w : c.naf_bounds) {
            d.cap = std::min(d.cap, w);
        }
        dense.push_back(std::move(d));
    }
    std::vector<Weight> values(pi.world_count(), Weight::one());
    std::vector<Weight> scratch(base.size());
    contract(base.size(), dense, values, scratch);
    for (std::uint32_t m = 0; m < values.size(); ++m) {
        pi.set(m, values[m]);
    }
    return pi;
}

bool guess_consistent(const PossibilityDistribution& pi, const Guess& g, const std::set<Atom>& atoms) {
    return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) {
        auto it = g.find(a);
        return it != g.end() && it->second == pi.possibility_not(a);
    });
}

std::vector<Valuation> semantic_answer_sets(const Program& p, const CertaintyScale& grid, const SemanticOptions& opts) {
    require_weights_on_scale(p, grid);
    const detail::IndexedProgram prog(p);
    const auto nbase = prog.atoms.size();
    if (nbase > opts.max_base || nbase > PossibilityDistribution::max_base) {
        throw GuardError("semantic search over " + std::to_string(nbase) + " atoms exceeds the limit of "
                         + std::to_string(std::min(opts.max_base, PossibilityDistribution::max_base)));
    }
    const auto guesses = detail::guess_count(grid.size(), prog.naf.size());
    const auto work = detail::saturating_mul(guesses, std::uint64_t{1} << nbase);
    if (work > opts.max_work) {
        throw GuardError("semantic search needs 2^" + std::to_string(nbase) + " * " + std::to_string(grid.size()) + "^"
                         + std::to_string(prog.naf.size()) + " world evaluations; the limit is "
                         + std::to_string(opts.max_work));
    }
    auto make_worker = [&prog, &grid, nbase] {
        return [&prog, &grid, nbase, digits = std::vector<std::size_t>(prog.naf.size()),
                guessed = std::vector<Weight>(nbase), dense = std::vector<DenseConstraint>(prog.rules.size()),
                pi = std::vector<Weight>(std::size_t{1} << nbase), poss_not = std::vector<Weight>(nbase)](
                   std::uint64_t index) mutable -> std::optional<Valuation> {
            detail::decode_guess(index, grid.size(), digits);
            for (std::size_t k = 0; k < prog.naf.size(); ++k) {
                guessed[prog.naf[k]] = grid[digits[k]];
            }
            for (std::size_t r = 0; r < prog.rules.size(); ++r) {
                const auto& rule = prog.rules[r];
                auto& d = dense[r];
                d.head = rule.head;
                d.body.assign(rule.pos.begin(), rule.pos.end());
                d.cap = rule.weight;
                for (auto a : rule.naf) {
                    d.cap = std::min(d.cap, guessed[a]);
                }
            }
            std::fill(pi.begin(), pi.end(), Weight::one());
            contract(nbase, dense, pi, poss_not);
            // contract() leaves Pi(not a) of the previous sweep; the final sweep changed nothing.
            for (auto a : prog.naf) {
                if (poss_not[a] != guessed[a]) {
                    return std::nullopt;
                }
            }
            // Atoms outside naf take g(a) := Pi(not a), which satisfies the condition by construction.
            Valuation v;
            for (std::size_t a = 0; a < nbase; ++a) {
                v.set(prog.atoms[a], poss_not[a].complement());
            }
            return v;
        };
    };
    return detail::search_guesses(guesses, opts.execution, make_worker);
}

std::vector<Interpretation> semantic_classical_answer_sets(const Program& p, const CertaintyScale& grid,
                                                           const SemanticOptions& opts) {
    std::vector<Interpretation> out;
    for (const auto& v : semantic_answer_sets(p, grid, opts)) {
        const auto& entries = v.entries();
        if (std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.is_one(); })) {
            out.push_back(v.support());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pasp
