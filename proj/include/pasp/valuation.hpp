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

#include <pasp/syntax.hpp>
#include <pasp/weight.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pasp {

/// Certainty degree per atom; unlisted atoms are 0.
///
/// Zero entries are never stored, so two valuations are equal iff they agree
/// on every atom, and {a^c, ...} rendering lists exactly the non-zero atoms.
class Valuation {
public:
    Valuation() = default;
    Valuation(std::initializer_list<std::pair<const Atom, Weight>> init);

    Weight operator[](const Atom& a) const;
    void set(const Atom& a, Weight w);

    const std::map<Atom, Weight>& entries() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }

    /// {a | V(a) > 0}.
    std::set<Atom> support() const;

    /// "{can=0.2, cb=1, ld=0.8}"; "{}" for the all-zero valuation.
    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend auto operator<=>(const Valuation& a, const Valuation& b) { return a.values_ <=> b.values_; }

private:
    std::map<Atom, Weight> values_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// A finite, sorted set of degrees that contains 0 and 1 and is closed under x -> 1-x.
class CertaintyScale {
public:
    /// {0, 1}.
    CertaintyScale();

    /// The closure of `values` together with 0 and 1.
    explicit CertaintyScale(std::span<const Weight> values);
    CertaintyScale(std::initializer_list<Weight> values);

    /// Multiples of 1/k. Throws ValidationError for k == 0.
    static CertaintyScale uniform(std::int64_t k);

    std::span<const Weight> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Weight& operator[](std::size_t i) const { return values_[i]; }

    bool contains(const Weight& w) const;
    std::optional<std::size_t> index_of(const Weight& w) const;

    /// Smallest member strictly greater than `x`; nullopt when x >= 1.
    std::optional<Weight> next_above(const Weight& x) const;

    /// Union of both scales.
    CertaintyScale merged(const CertaintyScale& other) const;

    /// "{0, 0.2, 0.8, 1}".
    std::string to_string() const;

    friend bool operator==(const CertaintyScale&, const CertaintyScale&) = default;

private:
    std::vector<Weight> values_;
};

/// Throws ScaleError naming the first rule weight of `p` missing from `scale`.
void require_weights_on_scale(const Program& p, const CertaintyScale& scale);

} // namespace pasp
