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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pasp {

/// An exact rational certainty degree in [0,1].
///
/// Stored in lowest terms with a positive denominator, so structural equality
/// is value equality. Denominators are capped at max_denominator, which keeps
/// the cross-multiplied comparisons exact in 64 bits.
class Weight {
public:
    /// Maximum number of fractional digits accepted by parse().
    static constexpr int max_fraction_digits = 6;
    static constexpr std::int64_t max_denominator = std::int64_t{1} << 31;

    constexpr Weight() noexcept = default;

    /// num/den, reduced. Throws ValidationError unless 0 <= num/den <= 1 and
    /// the reduced denominator is at most max_denominator.
    static Weight ratio(std::int64_t num, std::int64_t den);

    /// Parses a decimal literal "d+(.d+)?" with at most six fractional digits.
    /// Throws ValidationError on malformed input or a value outside [0,1].
    static Weight parse(std::string_view text);

    /// Like parse(), but also accepts a fraction "num/den". Used for command-line values.
    static Weight parse_rational(std::string_view text);

    static constexpr Weight zero() noexcept { return Weight{}; }
    static constexpr Weight one() noexcept { return Weight{1, 1}; }

    constexpr std::int64_t numerator() const noexcept { return num_; }
    constexpr std::int64_t denominator() const noexcept { return den_; }

    constexpr bool is_zero() const noexcept { return num_ == 0; }
    constexpr bool is_one() const noexcept { return num_ == den_; }

    /// 1 - w.
    constexpr Weight complement() const noexcept { return Weight{den_ - num_, den_}; }

    /// Exact decimal when the denominator has only factors 2 and 5 ("0.25"),
    /// otherwise "num/den".
    std::string to_string() const;

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend constexpr bool operator==(const Weight&, const Weight&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const Weight& a, const Weight& b) noexcept {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    constexpr Weight(std::int64_t num, std::int64_t den) noexcept : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

} // namespace pasp
