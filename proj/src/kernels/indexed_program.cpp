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

#include "indexed_program.hpp"

#include <pasp/error.hpp>

#include <algorithm>

namespace pasp::detail {

namespace {

std::vector<std::vector<std::uint32_t>> build_watches(const IndexedProgram& p) {
    std::vector<std::vector<std::uint32_t>> watch(p.atoms.size());
    for (std::uint32_t r = 0; r < p.rules.size(); ++r) {
        for (auto a : p.rules[r].pos) {
            watch[a].push_back(r);
        }
    }
    return watch;
}

} // namespace

IndexedProgram::IndexedProgram(const Program& p) {
    const auto base = p.herbrand_base();
    atoms.assign(base.begin(), base.end());
    rules.reserve(p.size());
    auto to_ids = [this](const std::vector<Atom>& names) {
        std::vector<AtomId> ids;
        ids.reserve(names.size());
        for (const auto& n : names) {
            ids.push_back(id(n));
        }
        return ids;
    };
    for (const auto& r : p.rules()) {
        rules.push_back({id(r.rule.head), to_ids(r.rule.pos_body), to_ids(r.rule.naf_body), r.weight});
    }
    for (const auto& a : naf_atoms(p)) {
        naf.push_back(id(a));
    }
}

AtomId IndexedProgram::id(const Atom& a) const {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
    if (it == atoms.end() || *it != a) {
        throw LookupError("atom '" + a + "' is not in the Herbrand base");
    }
    return static_cast<AtomId>(it - atoms.begin());
}

LeastModelEngine::LeastModelEngine(const IndexedProgram& p)
    : prog_(&p)
    , watch_(build_watches(p))
    , missing_(p.rules.size())
    , model_(p.atoms.size()) {
    queue_.reserve(p.atoms.size());
}

const std::vector<char>& LeastModelEngine::compute(std::span<const char> enabled) {
    std::fill(model_.begin(), model_.end(), 0);
    queue_.clear();
    auto derive = [this](AtomId a) {
        if (!model_[a]) {
            model_[a] = 1;
            queue_.push_back(a);
        }
    };
    const auto& rules = prog_->rules;
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        missing_[r] = static_cast<std::uint32_t>(rules[r].pos.size());
        if (enabled[r] && missing_[r] == 0) {
            derive(rules[r].head);
        }
    }
    for (std::size_t q = 0; q < queue_.size(); ++q) {
        for (auto r : watch_[queue_[q]]) {
            if (--missing_[r] == 0 && enabled[r]) {
                derive(rules[r].head);
            }
        }
    }
    return model_;
}

PossFixpointEngine::PossFixpointEngine(const IndexedProgram& p)
    : prog_(&p)
    , watch_(build_watches(p))
    , missing_(p.rules.size())
    , value_(p.atoms.size())
    , done_(p.atoms.size()) {}

const std::vector<Weight>& PossFixpointEngine::compute(std::span<const Weight> rule_weights) {
    std::fill(value_.begin(), value_.end(), Weight::zero());
    std::fill(done_.begin(), done_.end(), 0);
    heap_.clear();
    auto offer = [this](AtomId a, Weight w) {
        if (!done_[a] && w > value_[a]) {
            value_[a] = w;
            heap_.emplace_back(w, a);
            std::push_heap(heap_.begin(), heap_.end());
        }
    };
    const auto& rules = prog_->rules;
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        missing_[r] = static_cast<std::uint32_t>(rules[r].pos.size());
        if (missing_[r] == 0) {
            offer(rules[r].head, rule_weights[r]);
        }
    }
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end());
        const auto [w, a] = heap_.back();
        heap_.pop_back();
        if (done_[a] || w != value_[a]) {
            continue;
        }
        done_[a] = 1;
        // `a` is the weakest body atom finalized so far, so it bounds every rule it completes.
        for (auto r : watch_[a]) {
            if (--missing_[r] == 0) {
                offer(rules[r].head, std::min(rule_weights[r], w));
            }
        }
    }
    return value_;
}

} // namespace pasp::detail
