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

#include <pasp/weight.hpp>

#include <pasp/error.hpp>

#include <charconv>
#include <numeric>
#include <ostream>

namespace pasp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

std::int64_t to_int(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ValidationError("number out of range: '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Weight Weight::ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) {
        throw ValidationError("weight denominator must be positive");
    }
    if (num < 0 || num > den) {
        throw ValidationError("weight " + std::to_string(num) + "/" + std::to_string(den) + " outside [0,1]");
    }
    const auto g = std::gcd(num, den);
    if (den / g > max_denominator) {
        throw ValidationError("weight denominator " + std::to_string(den / g) + " is too large");
    }
    return Weight{num / g, den / g};
}

Weight Weight::parse(std::string_view text) {
    const auto dot = text.find('.');
    const auto int_part = text.substr(0, dot);
    const auto frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!all_digits(int_part) || (dot != std::string_view::npos && !all_digits(frac_part))) {
        throw ValidationError("malformed weight literal '" + std::string(text) + "'");
    }
    if (frac_part.size() > static_cast<std::size_t>(max_fraction_digits)) {
        throw ValidationError("weight literal '" + std::string(text) + "' has more than "
                              + std::to_string(max_fraction_digits) + " fractional digits");
    }
    const std::int64_t whole = to_int(int_part, text);
    std::int64_t scale = 1;
    std::int64_t frac = 0;
    if (!frac_part.empty()) {
        frac = to_int(frac_part, text);
        for (std::size_t i = 0; i < frac_part.size(); ++i) {
            scale *= 10;
        }
    }
    if (whole > 1 || (whole == 1 && frac != 0)) {
        throw ValidationError("weight " + std::string(text) + " outside [0,1]");
    }
    return ratio(whole * scale + frac, scale);
}

Weight Weight::parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse(text);
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ValidationError("malformed fraction '" + std::string(text) + "'");
    }
    return ratio(to_int(num, text), to_int(den, text));
}

std::string Weight::to_string() const {
    if (num_ == 0) {
        return "0";
    }
    if (num_ == den_) {
        return "1";
    }
    // Terminating decimal iff den = 2^a 5^b.
    std::int64_t rest = den_;
    while (rest % 2 == 0) {
        rest /= 2;
    }
    while (rest % 5 == 0) {
        rest /= 5;
    }
    if (rest != 1) {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    // Long division; terminates because den has no prime factors besides 2 and 5.
    std::string frac;
    for (std::int64_t r = num_; r != 0; r %= den_) {
        r *= 10;
        frac += static_cast<char>('0' + r / den_);
    }
    return "0." + frac;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

} // namespace pasp
