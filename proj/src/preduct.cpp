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

#include <pasp/preduct.hpp>

#include <pasp/error.hpp>

#include "kernels/guess_search.hpp"
#include "kernels/indexed_program.hpp"

#include <algorithm>

namespace pasp {

Interpretation cut(const Valuation& v, Weight c, CutKind kind, const std::set<Atom>& universe) {
    Interpretation out;
    for (const auto& a : universe) {
        const auto w = v[a];
        if (kind == CutKind::at_least ? w >= c : w > c) {
            out.insert(out.end(), a);
        }
    }
    return out;
}

Program c_cut(const Program& p, Weight c) {
    std::vector<PossRule> kept;
    for (const auto& r : p.rules()) {
        if (r.weight >= c) {
            kept.push_back(r);
        }
    }
    return Program(std::move(kept));
}

Valuation poss_step(const Program& p, const Valuation& v) {
    if (!p.is_definite()) {
        throw PreconditionError("poss_step requires a possibilistic definite program");
    }
    Valuation next = v;
    for (const auto& r : p.rules()) {
        Weight body = r.weight;
        for (const auto& a : r.rule.pos_body) {
            body = std::min(body, v[a]);
        }
        if (body > next[r.rule.head]) {
            next.set(r.rule.head, body);
        }
    }
    return next;
}

Valuation poss_least_fixpoint(const Program& p) {
    Valuation v;
    for (;;) {
        auto next = poss_step(p, v);
        if (next == v) {
            return v;
        }
        v = std::move(next);
    }
}

Weight naf_allowance(const Rule& r, const Valuation& v) {
    Weight strongest = Weight::zero();
    for (const auto& a : r.naf_body) {
        strongest = std::max(strongest, v[a]);
    }
    return strongest.complement();
}

Program poss_reduct(const Program& p, const Valuation& v) {
    std::vector<PossRule> out;
    for (const auto& r : p.rules()) {
        const auto w = std::min(r.weight, naf_allowance(r.rule, v));
        if (!w.is_zero()) {
            out.push_back({Rule{r.rule.head, r.rule.pos_body, {}}, w});
        }
    }
    return Program(std::move(out));
}

bool is_poss_answer_set(const Program& p, const Valuation& v) { return poss_least_fixpoint(poss_reduct(p, v)) == v; }

std::vector<Valuation> enumerate_poss_answer_sets(const Program& p, const CertaintyScale& grid,
                                                  const DirectOptions& opts) {
    require_weights_on_scale(p, grid);
    const detail::IndexedProgram prog(p);
    const auto count = detail::guess_count(grid.size(), prog.naf.size());
    if (count > opts.max_candidates) {
        throw GuardError("direct search needs " + std::to_string(grid.size()) + "^" + std::to_string(prog.naf.size())
                         + " guesses; the limit is " + std::to_string(opts.max_candidates));
    }
    auto make_worker = [&prog, &grid] {
        return [&prog, &grid, engine = detail::PossFixpointEngine(prog), digits = std::vector<std::size_t>(prog.naf.size()),
                guessed = std::vector<Weight>(prog.atoms.size()),
                weights = std::vector<Weight>(prog.rules.size())](std::uint64_t index) mutable
               -> std::optional<Valuation> {
            detail::decode_guess(index, grid.size(), digits);
            for (std::size_t k = 0; k < prog.naf.size(); ++k) {
                guessed[prog.naf[k]] = grid[digits[k]];
            }
            // The reduct reads the valuation only at naf atoms.
            for (std::size_t r = 0; r < prog.rules.size(); ++r) {
                Weight strongest = Weight::zero();
                for (auto a : prog.rules[r].naf) {
                    strongest = std::max(strongest, guessed[a]);
                }
                weights[r] = std::min(prog.rules[r].weight, strongest.complement());
            }
            const auto& fix = engine.compute(weights);
            for (auto a : prog.naf) {
                if (fix[a] != guessed[a]) {
                    return std::nullopt;
                }
            }
            Valuation v;
            for (std::size_t a = 0; a < fix.size(); ++a) {
                v.set(prog.atoms[a], fix[a]);
            }
            return v;
        };
    };
    return detail::search_guesses(count, opts.execution, make_worker);
}

Program baseline_reduct(const Program& p, const Interpretation& a) {
    std::vector<PossRule> out;
    for (const auto& r : p.rules()) {
        const auto& naf = r.rule.naf_body;
        if (std::none_of(naf.begin(), naf.end(), [&](const Atom& x) { return a.contains(x); })) {
            out.push_back({Rule{r.rule.head, r.rule.pos_body, {}}, r.weight});
        }
    }
    return Program(std::move(out));
}

std::vector<Valuation> baseline_answer_sets(const Program& p, const EnumerateOptions& opts) {
    std::vector<Valuation> out;
    for (const auto& m : enumerate_answer_sets(strip_weights(p), opts)) {
        auto w = poss_least_fixpoint(baseline_reduct(p, m));
        if (w.support() == m) {
            out.push_back(std::move(w));
        }
    }
    detail::sort_unique(out);
    return out;
}

} // namespace pasp
