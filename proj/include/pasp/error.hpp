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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pasp {

// Base of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed program text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what)
        , line_(line)
        , column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An AST or argument violates a structural invariant (bad atom name, weight out of range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain, e.g. a fixpoint on a program with naf.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An atom is not part of the relevant Herbrand base or simulation map.
class LookupError : public Error {
public:
    using Error::Error;
};

// A weight is not on the certainty scale that an operation works over.
class ScaleError : public Error {
public:
    using Error::Error;
};

// A search would exceed its configured budget. Never swallowed into "no answer sets".
class GuardError : public Error {
public:
    using Error::Error;
};

} // namespace pasp
