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

#ifndef ABDUKIT_CORE_HPP
#define ABDUKIT_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abdukit/error.hpp"

namespace abdukit {

/// Resource caps shared by the grounder and the answer-set search.
struct Limits {
    std::size_t max_ground_rules = 5000;
    /// Upper bound on the number of guessed literals (head literals that
    /// also occur under negation as failure) in one answer-set search.
    std::size_t max_universe = 18;
};

// ---------------------------------------------------------------------------
// Terms, atoms, literals
// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { Integer, Constant, Variable };

/// A function-free term. Variables start with an uppercase letter.
struct Term {
    TermKind kind = TermKind::Constant;
    std::int64_t number = 0;
    std::string name;

    static Term constant(std::string name);
    static Term integer(std::int64_t value);
    static Term variable(std::string name);

    bool is_variable() const noexcept { return kind == TermKind::Variable; }
    bool is_integer() const noexcept { return kind == TermKind::Integer; }

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

/// Predicate identity is name plus arity.
struct Atom {
    std::string predicate;
    std::vector<Term> args;

    Atom() = default;
    explicit Atom(std::string pred, std::vector<Term> arguments = {})
        : predicate(std::move(pred)), args(std::move(arguments)) {}

    bool is_ground() const;
    /// Atoms in the "__" namespace are internal (shadows, names, update atoms).
    bool is_reserved() const { return predicate.starts_with("__"); }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

struct Literal {
    bool negated = false;   // strong negation
    Atom atom;

    Literal() = default;
    Literal(Atom a, bool neg = false) : negated(neg), atom(std::move(a)) {}

    Literal complement() const { return Literal(atom, !negated); }
    bool is_ground() const { return atom.is_ground(); }
    bool is_reserved() const { return atom.is_reserved(); }

    friend bool operator==(const Literal&, const Literal&) = default;
    /// Positive literals first, then predicate, arity and arguments.
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

enum class Relation : std::uint8_t { Less, LessEq, Greater, GreaterEq, Equal, NotEqual };

std::string_view to_string(Relation rel);

struct BodyLiteral {
    Literal literal;
    bool naf = false;

    friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
    friend std::strong_ordering operator<=>(const BodyLiteral& a, const BodyLiteral& b);
};

struct Comparison {
    Relation rel = Relation::Equal;
    Term lhs;
    Term rhs;

    friend bool operator==(const Comparison&, const Comparison&) = default;
    friend std::strong_ordering operator<=>(const Comparison& a, const Comparison& b);
};

using BodyElement = std::variant<BodyLiteral, Comparison>;

/// Evaluates a ground comparison. Order relations hold only between integers;
/// equality compares any two ground terms.
bool evaluate(const Comparison& cmp);

// ---------------------------------------------------------------------------
// Rules and programs
// ---------------------------------------------------------------------------

/// A disjunctive rule `h1 ; ... ; hk :- b1, ..., not c1, ...`. Head and body
/// are kept sorted and duplicate-free so reordered rules compare equal.
class Rule {
public:
    Rule() = default;
    Rule(std::vector<Literal> head, std::vector<BodyElement> body);

    static Rule fact(Literal l) { return Rule({std::move(l)}, {}); }
    static Rule constraint(std::vector<BodyElement> body) { return Rule({}, std::move(body)); }

    const std::vector<Literal>& head() const noexcept { return head_; }
    const std::vector<BodyElement>& body() const noexcept { return body_; }

    bool is_constraint() const noexcept { return head_.empty(); }
    bool is_fact() const noexcept { return head_.size() == 1 && body_.empty(); }
    /// Fact with one or more head literals and an empty body.
    bool is_disjunctive_fact() const noexcept { return !head_.empty() && body_.empty(); }
    bool is_ground() const;
    bool has_builtins() const;
    bool has_naf() const;

    std::vector<Literal> positive_body() const;
    std::vector<Literal> negative_body() const;
    /// Variable names in order of first appearance.
    std::vector<std::string> variables() const;

    /// Returns a copy with `elem` appended to the body.
    Rule with_body_element(BodyElement elem) const;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule& a, const Rule& b);

private:
    std::vector<Literal> head_;
    std::vector<BodyElement> body_;
};

using Substitution = std::map<std::string, Term>;

/// Replaces variables bound by `s`; unbound variables are kept.
Rule instantiate(const Rule& rule, const Substitution& s);

/// Variants modulo variable renaming and element reordering map to the same
/// value.
Rule canonical_form(const Rule& rule);

/// A set of rules in canonical form.
class Program {
public:
    using const_iterator = std::set<Rule>::const_iterator;

    Program() = default;
    Program(std::initializer_list<Rule> rules);
    explicit Program(const std::vector<Rule>& rules);

    bool insert(const Rule& rule);
    bool erase(const Rule& rule);
    bool contains(const Rule& rule) const;
    void insert_all(const Program& other);

    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    const_iterator begin() const noexcept { return rules_.begin(); }
    const_iterator end() const noexcept { return rules_.end(); }

    bool is_ground() const;

    friend bool operator==(const Program&, const Program&) = default;
    friend auto operator<=>(const Program& a, const Program& b) { return a.rules_ <=> b.rules_; }

private:
    std::set<Rule> rules_;
};

using Universe = std::set<Term>;

/// Constants and integers mentioned anywhere in the program.
Universe constants(const Program& p);
Universe constants(const Rule& r);
Universe constants(const Literal& l);

/// Ground instantiation over `universe`; comparisons are evaluated and
/// removed. Throws NoConstants or GroundingBudgetExceeded.
Program ground(const Program& p, const Universe& universe, const Limits& limits = {});
/// Ground instantiation over the program's own constants.
Program ground(const Program& p, const Limits& limits = {});
/// Ground instances of a single rule.
std::vector<Rule> ground_instances(const Rule& r, const Universe& universe,
                                   const Limits& limits = {});

/// Set operations on ground instantiations over the combined constants.
Program program_union(const Program& p, const Program& q, const Limits& limits = {});
Program program_diff(const Program& p, const Program& q, const Limits& limits = {});
/// Membership of a ground rule in inst(p) over `universe`.
bool instance_of(const Rule& ground_rule, const Program& p, const Universe& universe,
                 const Limits& limits = {});

/// All ground literals (both polarities) over the predicates and constants
/// of `p`.
std::set<Literal> literal_universe(const Program& p, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Text rendering (the parser module owns the inverse)
// ---------------------------------------------------------------------------

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const BodyElement& e);
/// Rule in source syntax including the trailing period.
std::string to_string(const Rule& r);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Rule& r);
std::ostream& operator<<(std::ostream& os, const Program& p);

} // namespace abdukit

#endif
