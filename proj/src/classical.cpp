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

#include <pasp/classical.hpp>

#include <pasp/error.hpp>

#include "kernels/guess_search.hpp"
#include "kernels/indexed_program.hpp"

#include <algorithm>

namespace pasp {

namespace {

void require_classical(const Program& p, const char* op) {
    if (!p.is_classical()) {
        throw PreconditionError(std::string(op) + " requires a classical program (all weights 1)");
    }
}

bool satisfied(const std::vector<Atom>& body, const Interpretation& i) {
    return std::all_of(body.begin(), body.end(), [&](const Atom& a) { return i.contains(a); });
}

} // namespace

Program strip_weights(const Program& p) {
    std::vector<PossRule> rules(p.rules().begin(), p.rules().end());
    for (auto& r : rules) {
        r.weight = Weight::one();
    }
    return Program(std::move(rules));
}

Program gl_reduct(const Program& p, const Interpretation& i) {
    require_classical(p, "gl_reduct");
    std::vector<PossRule> kept;
    for (const auto& r : p.rules()) {
        const auto& naf = r.rule.naf_body;
        if (std::none_of(naf.begin(), naf.end(), [&](const Atom& a) { return i.contains(a); })) {
            kept.push_back({Rule{r.rule.head, r.rule.pos_body, {}}, r.weight});
        }
    }
    return Program(std::move(kept));
}

Interpretation least_model(const Program& p) {
    if (!p.is_definite()) {
        throw PreconditionError("least_model requires a definite program");
    }
    // Plain T_P iteration; the kernel engine is checked against this.
    Interpretation current;
    for (;;) {
        Interpretation next = current;
        for (const auto& r : p.rules()) {
            if (satisfied(r.rule.pos_body, current)) {
                next.insert(r.rule.head);
            }
        }
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
}

bool is_answer_set(const Program& p, const Interpretation& i) { return least_model(gl_reduct(p, i)) == i; }

std::vector<Interpretation> enumerate_answer_sets(const Program& p, const EnumerateOptions& opts) {
    require_classical(p, "enumerate_answer_sets");
    const detail::IndexedProgram prog(p);
    const auto naf_count = prog.naf.size();
    if (naf_count > opts.max_naf_atoms || naf_count >= 63) {
        throw GuardError("program has " + std::to_string(naf_count) + " naf atoms; the limit is "
                         + std::to_string(opts.max_naf_atoms));
    }
    // in_guess[a] marks naf atoms assumed true; rule r is enabled iff its naf body avoids them.
    auto make_worker = [&prog] {
        return [&prog, engine = detail::LeastModelEngine(prog), in_guess = std::vector<char>(prog.atoms.size()),
                enabled = std::vector<char>(prog.rules.size())](std::uint64_t guess) mutable
               -> std::optional<Interpretation> {
            for (std::size_t k = 0; k < prog.naf.size(); ++k) {
                in_guess[prog.naf[k]] = static_cast<char>((guess >> k) & 1U);
            }
            for (std::size_t r = 0; r < prog.rules.size(); ++r) {
                const auto& naf = prog.rules[r].naf;
                enabled[r] = std::none_of(naf.begin(), naf.end(), [&](auto a) { return in_guess[a] != 0; });
            }
            const auto& model = engine.compute(enabled);
            for (auto a : prog.naf) {
                if (model[a] != in_guess[a]) {
                    return std::nullopt;
                }
            }
            Interpretation out;
            for (std::size_t a = 0; a < model.size(); ++a) {
                if (model[a]) {
                    out.insert(out.end(), prog.atoms[a]);
                }
            }
            return out;
        };
    };
    return detail::search_guesses(std::uint64_t{1} << naf_count, opts.execution, make_worker);
}

bool parallel_available() noexcept {
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

} // namespace pasp
