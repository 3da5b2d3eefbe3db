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

#include <pasp/syntax.hpp>

#include <pasp/error.hpp>

#include <algorithm>
#include <cctype>
#include <optional>

namespace pasp {

bool is_valid_atom(std::string_view name) {
    if (name.empty() || name == "not" || !std::islower(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

namespace {

void check_body_part(const std::vector<Atom>& part, const char* what) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (!is_valid_atom(part[i])) {
            throw ValidationError("invalid atom name '" + part[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (part[j] == part[i]) {
                throw ValidationError("duplicate atom '" + part[i] + "' in " + what);
            }
        }
    }
}

} // namespace

Program::Program(std::vector<PossRule> rules) : rules_(std::move(rules)) {
    for (const auto& r : rules_) {
        if (!is_valid_atom(r.rule.head)) {
            throw ValidationError("invalid atom name '" + r.rule.head + "'");
        }
        check_body_part(r.rule.pos_body, "positive body");
        check_body_part(r.rule.naf_body, "naf body");
        if (r.weight.is_zero()) {
            throw ValidationError("rule for '" + r.rule.head + "' has weight 0 and can never contribute");
        }
        if (!r.rule.is_definite()) {
            kind_ = ProgramKind::normal;
        }
    }
}

bool Program::is_classical() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const PossRule& r) { return r.weight.is_one(); });
}

std::set<Atom> Program::herbrand_base() const {
    std::set<Atom> base;
    for (const auto& r : rules_) {
        base.insert(r.rule.head);
        base.insert(r.rule.pos_body.begin(), r.rule.pos_body.end());
        base.insert(r.rule.naf_body.begin(), r.rule.naf_body.end());
    }
    return base;
}

std::set<Atom> naf_atoms(const Program& p) {
    std::set<Atom> out;
    for (const auto& r : p.rules()) {
        out.insert(r.rule.naf_body.begin(), r.rule.naf_body.end());
    }
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Parsing
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

enum class Tok { ident, number, colon, if_, comma, dot, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        const auto line = line_;
        const auto col = col_;
        if (pos_ >= src_.size()) {
            return {Tok::end, {}, line, col};
        }
        const char c = src_[pos_];
        const auto start = pos_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size()
                   && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                advance();
            }
            return {Tok::ident, src_.substr(start, pos_ - start), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            }
            // A '.' belongs to the number only when a digit follows; "1." ends a statement.
            if (pos_ + 1 < src_.size() && src_[pos_] == '.'
                && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    advance();
                }
            }
            return {Tok::number, src_.substr(start, pos_ - start), line, col};
        }
        advance();
        switch (c) {
            case ':':
                if (pos_ < src_.size() && src_[pos_] == '-') {
                    advance();
                    return {Tok::if_, src_.substr(start, 2), line, col};
                }
                return {Tok::colon, src_.substr(start, 1), line, col};
            case ',': return {Tok::comma, src_.substr(start, 1), line, col};
            case '.': return {Tok::dot, src_.substr(start, 1), line, col};
            default: break;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::ident: return "atom";
        case Tok::number: return "weight";
        case Tok::colon: return "':'";
        case Tok::if_: return "':-'";
        case Tok::comma: return "','";
        case Tok::dot: return "'.'";
        case Tok::end: return "end of input";
    }
    return "token";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { shift(); }

    Program parse() {
        std::vector<PossRule> rules;
        while (cur_.kind != Tok::end) {
            rules.push_back(statement());
        }
        return Program(std::move(rules));
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(at.line, at.column, msg);
    }

    Token expect(Tok kind) {
        if (cur_.kind != kind) {
            fail(cur_, std::string("expected ") + describe(kind) + ", found " + describe(cur_.kind));
        }
        auto t = cur_;
        shift();
        return t;
    }

    Atom atom() {
        const auto t = expect(Tok::ident);
        if (!is_valid_atom(t.text)) {
            fail(t, "invalid atom name '" + std::string(t.text) + "' (must start with a lowercase letter)");
        }
        return Atom(t.text);
    }

    PossRule statement() {
        PossRule out;
        if (cur_.kind == Tok::number) {
            const auto t = cur_;
            shift();
            try {
                out.weight = Weight::parse(t.text);
            }
            catch (const ValidationError& e) {
                fail(t, e.what());
            }
            if (out.weight.is_zero()) {
                fail(t, "weight 0 rule can never contribute; remove it or give it a positive weight");
            }
            expect(Tok::colon);
        }
        out.rule.head = atom();
        if (cur_.kind == Tok::if_) {
            shift();
            do {
                literal(out.rule);
            } while (cur_.kind == Tok::comma && (shift(), true));
        }
        expect(Tok::dot);
        return out;
    }

    void literal(Rule& r) {
        bool naf = false;
        if (cur_.kind == Tok::ident && cur_.text == "not") {
            naf = true;
            shift();
        }
        const auto at = cur_;
        auto a = atom();
        auto& part = naf ? r.naf_body : r.pos_body;
        if (std::find(part.begin(), part.end(), a) != part.end()) {
            fail(at, "duplicate atom '" + a + "' in " + (naf ? "naf" : "positive") + " body");
        }
        part.push_back(std::move(a));
    }

    Lexer lex_;
    Token cur_{Tok::end, {}, 1, 1};
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

/////////////////////////////////////////////////////////////////////////////////////////
// Rendering
/////////////////////////////////////////////////////////////////////////////////////////
std::string render_rule(const PossRule& r, WeightStyle style) {
    std::string out;
    if (style == WeightStyle::explicit_weights) {
        out += r.weight.to_string();
        out += ": ";
    }
    else if (!r.weight.is_one()) {
        throw PreconditionError("cannot omit weight " + r.weight.to_string() + " of rule for '" + r.rule.head + "'");
    }
    out += r.rule.head;
    if (!r.rule.is_fact()) {
        out += " :- ";
        bool first = true;
        for (const auto& a : r.rule.pos_body) {
            out += first ? "" : ", ";
            out += a;
            first = false;
        }
        for (const auto& a : r.rule.naf_body) {
            out += first ? "not " : ", not ";
            out += a;
            first = false;
        }
    }
    out += '.';
    return out;
}

std::string render_program(const Program& p, WeightStyle style) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += render_rule(r, style);
        out += '\n';
    }
    return out;
}

} // namespace pasp
