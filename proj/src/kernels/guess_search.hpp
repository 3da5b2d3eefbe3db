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

// Guess-space enumeration shared by the answer-set searches.
//
// A search visits guess indices [0, count). Each worker owns its scratch
// state and maps an index to an optional result. search_serial is the
// reference; search_parallel splits the index range across OpenMP threads.
// Both return the sorted, deduplicated result set, so they are
// interchangeable.

#include <pasp/error.hpp>
#include <pasp/execution.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pasp::detail {

// radix^digits, saturating at UINT64_MAX.
inline std::uint64_t guess_count(std::uint64_t radix, std::size_t digits) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        if (radix != 0 && n > std::numeric_limits<std::uint64_t>::max() / radix) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        n *= radix;
    }
    return n;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

// Mixed-radix decode, least significant digit first.
inline void decode_guess(std::uint64_t index, std::uint64_t radix, std::span<std::size_t> digits) {
    for (auto& d : digits) {
        d = static_cast<std::size_t>(index % radix);
        index /= radix;
    }
}

template <class R>
void sort_unique(std::vector<R>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class MakeWorker>
auto search_serial(std::uint64_t count, MakeWorker&& make_worker) {
    auto worker = make_worker();
    using R = typename decltype(worker(std::uint64_t{}))::value_type;
    std::vector<R> out;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (auto r = worker(i)) {
            out.push_back(std::move(*r));
        }
    }
    sort_unique(out);
    return out;
}

template <class MakeWorker>
auto search_parallel(std::uint64_t count, MakeWorker&& make_worker) {
#if defined(_OPENMP)
    using Worker = decltype(make_worker());
    using R = typename decltype(std::declval<Worker&>()(std::uint64_t{}))::value_type;
    std::vector<R> out;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
    {
        auto worker = make_worker();
        std::vector<R> local;
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            if (auto r = worker(static_cast<std::uint64_t>(i))) {
                local.push_back(std::move(*r));
            }
        }
#pragma omp critical(pasp_guess_merge)
        out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    sort_unique(out);
    return out;
#else
    return search_serial(count, std::forward<MakeWorker>(make_worker));
#endif
}

template <class MakeWorker>
auto search_guesses(std::uint64_t count, Execution exec, MakeWorker&& make_worker) {
    if (exec == Execution::parallel && count > 1) {
        return search_parallel(count, std::forward<MakeWorker>(make_worker));
    }
    return search_serial(count, std::forward<MakeWorker>(make_worker));
}

} // namespace pasp::detail
