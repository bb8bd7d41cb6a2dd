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

#ifndef ABDUKIT_PARSER_HPP
#define ABDUKIT_PARSER_HPP

#include <string>
#include <string_view>

#include "abdukit/core.hpp"

namespace abdukit {

/// Contents of one `.edp` file.
///
///     p(X) :- q(X), not r(X), X != a.
///     -flies(X) :- penguin(X).
///     a ; b.
///     :- p, q.
///     #abducible q(X).
///     #variable broken_wing(X).
///
/// `%` starts a line comment. Identifiers beginning with `__` are reserved.
struct SourceUnit {
    Program program;
    Program abducibles;
    Program variable_rules;

    friend bool operator==(const SourceUnit&, const SourceUnit&) = default;
};

/// Throws SyntaxError (code SyntaxError or ReservedName) with a 1-based
/// line/column position.
SourceUnit parse(std::string_view text);

/// Parses a single rule; the trailing period is optional.
Rule parse_rule(std::string_view text);

/// Parses a single literal such as `-flies(tweety)`.
Literal parse_literal(std::string_view text);

/// Deterministic text: program rules, then `#abducible`, then `#variable`
/// directives, each in sorted order.
std::string render(const SourceUnit& unit);

/// One rule per line.
std::string render(const Program& program);

} // namespace abdukit

#endif
