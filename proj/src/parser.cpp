/*
 *  Copyright (C) 2026  The abdukit authors
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

#include "abdukit/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace abdukit {

namespace {

enum class Tok {
    Ident,      // lowercase-initial
    Variable,   // uppercase-initial
    Integer,
    Directive,  // #abducible / #variable
    LParen, RParen, Comma, Semicolon, Period, If, Minus,
    Rel,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        const char c = text_[pos_];
        auto single = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            advance();
            return t;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                advance();
            t.text = std::string(text_.substr(start, pos_ - start));
            if (t.text.starts_with("__"))
                throw SyntaxError(ErrorCode::ReservedName, t.line, t.column,
                                  "identifier '" + t.text + "' uses the reserved '__' prefix");
            if (std::isupper(static_cast<unsigned char>(c)))
                t.kind = Tok::Variable;
            else if (c == '_')
                throw SyntaxError(ErrorCode::SyntaxError, t.line, t.column,
                                  "identifiers must start with a letter");
            else
                t.kind = Tok::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                advance();
            t.kind = Tok::Integer;
            t.text = std::string(text_.substr(start, pos_ - start));
            return t;
        }
        if (c == '#') {
            const auto start = pos_;
            advance();
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                advance();
            t.kind = Tok::Directive;
            t.text = std::string(text_.substr(start, pos_ - start));
            return t;
        }
        switch (c) {
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        case ',': return single(Tok::Comma);
        case ';': return single(Tok::Semicolon);
        case '.': return single(Tok::Period);
        case '-': return single(Tok::Minus);
        case ':':
            if (peek(1) == '-') {
                advance();
                advance();
                t.kind = Tok::If;
                t.text = ":-";
                return t;
            }
            break;
        case '<':
        case '>':
        case '!':
        case '=': {
            std::string op(1, c);
            advance();
            if (pos_ < text_.size() && text_[pos_] == '=' && c != '=') {
                op += '=';
                advance();
            }
            if (op == "!")
                throw SyntaxError(ErrorCode::SyntaxError, t.line, t.column, "expected '!='");
            t.kind = Tok::Rel;
            t.text = op;
            return t;
        }
        default: break;
        }
        throw SyntaxError(ErrorCode::SyntaxError, t.line, t.column,
                          std::string("unexpected character '") + c + "'");
    }

private:
    char peek(std::size_t ahead) const
    {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::string describe(const Token& t)
{
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

    SourceUnit unit()
    {
        SourceUnit u;
        while (tok_.kind != Tok::End) {
            if (tok_.kind == Tok::Directive) {
                const Token d = tok_;
                shift();
                if (d.text == "#abducible")
                    u.abducibles.insert(rule(true));
                else if (d.text == "#variable")
                    u.variable_rules.insert(rule(true));
                else
                    fail(d, "unknown directive " + d.text + " (expected #abducible or #variable)");
            } else {
                u.program.insert(rule(true));
            }
        }
        return u;
    }

    Rule single_rule()
    {
        Rule r = rule(false);
        expect_end();
        return r;
    }

    Literal single_literal()
    {
        Literal l = literal();
        expect_end();
        return l;
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& message)
    {
        throw SyntaxError(ErrorCode::SyntaxError, at.line, at.column, message);
    }

    [[noreturn]] void expected(const std::string& what)
    {
        fail(tok_, "expected " + what + ", found " + describe(tok_));
    }

    void shift() { tok_ = lex_.next(); }

    void expect(Tok k, const std::string& what)
    {
        if (tok_.kind != k)
            expected(what);
        shift();
    }

    void expect_end()
    {
        if (tok_.kind != Tok::End)
            expected("end of input");
    }

    // rule := head? (":-" body)? "."
    Rule rule(bool require_period)
    {
        std::vector<Literal> head;
        std::vector<BodyElement> body;
        if (tok_.kind != Tok::If) {
            head.push_back(literal());
            while (tok_.kind == Tok::Semicolon) {
                shift();
                head.push_back(literal());
            }
        }
        if (tok_.kind == Tok::If) {
            shift();
            if (tok_.kind != Tok::Period && tok_.kind != Tok::End) {
                body.push_back(element());
                while (tok_.kind == Tok::Comma) {
                    shift();
                    body.push_back(element());
                }
            }
        }
        if (require_period)
            expect(Tok::Period, "'.', ',' or ';'");
        else if (tok_.kind == Tok::Period)
            shift();
        return Rule(std::move(head), std::move(body));
    }

    // elem := ["not"] lit | term REL term
    BodyElement element()
    {
        if (tok_.kind == Tok::Ident && tok_.text == "not") {
            shift();
            return BodyLiteral{literal(), true};
        }
        if (tok_.kind == Tok::Variable || tok_.kind == Tok::Integer ||
            (tok_.kind == Tok::Minus && peek_integer_after_minus())) {
            Term lhs = term();
            return comparison(std::move(lhs));
        }
        if (tok_.kind == Tok::Ident) {
            // Either a literal or a constant on the left of a comparison.
            Token name = tok_;
            shift();
            if (tok_.kind == Tok::Rel)
                return comparison(Term::constant(name.text));
            return BodyLiteral{literal_rest(name, false), false};
        }
        if (tok_.kind == Tok::Minus)
            return BodyLiteral{literal(), false};
        expected("a literal, 'not' or a comparison");
    }

    bool peek_integer_after_minus()
    {
        // A '-' in body position is strong negation unless a digit follows;
        // integers are only allowed as comparison operands there.
        Lexer probe = lex_;
        return probe.next().kind == Tok::Integer;
    }

    BodyElement comparison(Term lhs)
    {
        if (tok_.kind != Tok::Rel)
            expected("a comparison operator");
        Relation rel;
        const auto& op = tok_.text;
        if (op == "<") rel = Relation::Less;
        else if (op == "<=") rel = Relation::LessEq;
        else if (op == ">") rel = Relation::Greater;
        else if (op == ">=") rel = Relation::GreaterEq;
        else if (op == "=") rel = Relation::Equal;
        else rel = Relation::NotEqual;
        shift();
        Term rhs = term();
        return Comparison{rel, std::move(lhs), std::move(rhs)};
    }

    // lit := ["-"] ident ["(" term {"," term} ")"]
    Literal literal()
    {
        bool negated = false;
        if (tok_.kind == Tok::Minus) {
            negated = true;
            shift();
        }
        if (tok_.kind != Tok::Ident)
            expected("a predicate name");
        Token name = tok_;
        shift();
        return literal_rest(name, negated);
    }

    Literal literal_rest(const Token& name, bool negated)
    {
        if (name.text == "not")
            fail(name, "'not' cannot be used as a predicate name");
        Atom a(name.text);
        if (tok_.kind == Tok::LParen) {
            shift();
            a.args.push_back(term());
            while (tok_.kind == Tok::Comma) {
                shift();
                a.args.push_back(term());
            }
            expect(Tok::RParen, "',' or ')'");
        }
        return Literal(std::move(a), negated);
    }

    Term term()
    {
        bool minus = false;
        if (tok_.kind == Tok::Minus) {
            minus = true;
            shift();
            if (tok_.kind != Tok::Integer)
                expected("an integer after '-'");
        }
        switch (tok_.kind) {
        case Tok::Ident: {
            auto t = Term::constant(tok_.text);
            shift();
            return t;
        }
        case Tok::Variable: {
            auto t = Term::variable(tok_.text);
            shift();
            return t;
        }
        case Tok::Integer: {
            std::int64_t v = 0;
            const auto& s = tok_.text;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc())
                fail(tok_, "integer out of range");
            shift();
            return Term::integer(minus ? -v : v);
        }
        default: expected("a term");
        }
    }

    Lexer lex_;
    Token tok_;
};

std::string normalize_newlines(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
            continue;
        out += text[i];
    }
    return out;
}

} // namespace

SourceUnit parse(std::string_view text)
{
    const auto normalized = normalize_newlines(text);
    return Parser(normalized).unit();
}

Rule parse_rule(std::string_view text)
{
    return Parser(text).single_rule();
}

Literal parse_literal(std::string_view text)
{
    return Parser(text).single_literal();
}

std::string render(const Program& program)
{
    std::string out;
    for (const auto& r : program) {
        out += to_string(r);
        out += '\n';
    }
    return out;
}

std::string render(const SourceUnit& unit)
{
    std::string out = render(unit.program);
    for (const auto& r : unit.abducibles)
        out += "#abducible " + to_string(r) + '\n';
    for (const auto& r : unit.variable_rules)
        out += "#variable " + to_string(r) + '\n';
    return out;
}

} // namespace abdukit
