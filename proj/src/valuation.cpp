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

#include <pasp/valuation.hpp>

#include <pasp/error.hpp>

#include <algorithm>
#include <ostream>

namespace pasp {

Valuation::Valuation(std::initializer_list<std::pair<const Atom, Weight>> init) {
    for (const auto& [a, w] : init) {
        set(a, w);
    }
}

Weight Valuation::operator[](const Atom& a) const {
    auto it = values_.find(a);
    return it == values_.end() ? Weight::zero() : it->second;
}

void Valuation::set(const Atom& a, Weight w) {
    if (w.is_zero()) {
        values_.erase(a);
    }
    else {
        values_[a] = w;
    }
}

std::set<Atom> Valuation::support() const {
    std::set<Atom> out;
    for (const auto& [a, w] : values_) {
        out.insert(out.end(), a);
    }
    return out;
}

std::string Valuation::to_string() const {
    std::string out = "{";
    for (const auto& [a, w] : values_) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += a;
        out += '=';
        out += w.to_string();
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

CertaintyScale::CertaintyScale() : values_{Weight::zero(), Weight::one()} {}

CertaintyScale::CertaintyScale(std::span<const Weight> values) {
    values_.reserve(2 * values.size() + 2);
    values_.push_back(Weight::zero());
    values_.push_back(Weight::one());
    for (const auto& w : values) {
        values_.push_back(w);
        values_.push_back(w.complement());
    }
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

CertaintyScale::CertaintyScale(std::initializer_list<Weight> values)
    : CertaintyScale(std::span<const Weight>(values.begin(), values.size())) {}

CertaintyScale CertaintyScale::uniform(std::int64_t k) {
    if (k <= 0) {
        throw ValidationError("uniform scale needs a positive number of steps");
    }
    std::vector<Weight> v;
    for (std::int64_t i = 0; i <= k; ++i) {
        v.push_back(Weight::ratio(i, k));
    }
    return CertaintyScale(v);
}

bool CertaintyScale::contains(const Weight& w) const { return std::binary_search(values_.begin(), values_.end(), w); }

std::optional<std::size_t> CertaintyScale::index_of(const Weight& w) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), w);
    if (it == values_.end() || *it != w) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - values_.begin());
}

std::optional<Weight> CertaintyScale::next_above(const Weight& x) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), x);
    if (it == values_.end()) {
        return std::nullopt;
    }
    return *it;
}

CertaintyScale CertaintyScale::merged(const CertaintyScale& other) const {
    std::vector<Weight> all(values_);
    all.insert(all.end(), other.values_.begin(), other.values_.end());
    return CertaintyScale(all);
}

std::string CertaintyScale::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out += i ? ", " : "";
        out += values_[i].to_string();
    }
    return out + "}";
}

void require_weights_on_scale(const Program& p, const CertaintyScale& scale) {
    for (const auto& r : p.rules()) {
        if (!scale.contains(r.weight)) {
            throw ScaleError("rule weight " + r.weight.to_string() + " (rule for '" + r.rule.head
                             + "') is not on the grid " + scale.to_string()
                             + "; add it to the grid or use --grid auto");
        }
    }
}

} // namespace pasp
