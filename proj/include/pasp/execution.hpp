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

namespace pasp {

// How a guess-space search runs. Both produce identical, identically ordered results.
enum class Execution {
    serial,   // reference loop
    parallel, // OpenMP partitioning of the guess space; serial when built without OpenMP
};

/// True when the library was built with OpenMP.
bool parallel_available() noexcept;

} // namespace pasp
