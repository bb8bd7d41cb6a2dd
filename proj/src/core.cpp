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

#include "abdukit/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace abdukit {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NoConstants: return "NoConstants";
    case ErrorCode::GroundingBudgetExceeded: return "GroundingBudgetExceeded";
    case ErrorCode::CandidateBudgetExceeded: return "CandidateBudgetExceeded";
    case ErrorCode::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorCode::NonGroundRule: return "NonGroundRule";
    case ErrorCode::NotNLP: return "NotNLP";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ReservedName: return "ReservedName";
    case ErrorCode::AbducibleObservation: return "AbducibleObservation";
    case ErrorCode::SkepticalBotUnsupported: return "SkepticalBotUnsupported";
    case ErrorCode::ConstraintInVariablePart: return "ConstraintInVariablePart";
    case ErrorCode::RuleAlreadyPresent: return "RuleAlreadyPresent";
    case ErrorCode::RuleNotPresent: return "RuleNotPresent";
    case ErrorCode::ScopeNotSubset: return "ScopeNotSubset";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Terms, atoms, literals
// ---------------------------------------------------------------------------

Term Term::constant(std::string name)
{
    Term t;
    t.kind = TermKind::Constant;
    t.name = std::move(name);
    return t;
}

Term Term::integer(std::int64_t value)
{
    Term t;
    t.kind = TermKind::Integer;
    t.number = value;
    return t;
}

Term Term::variable(std::string name)
{
    Term t;
    t.kind = TermKind::Variable;
    t.name = std::move(name);
    return t;
}

bool operator==(const Term& a, const Term& b)
{
    if (a.kind != b.kind)
        return false;
    return a.kind == TermKind::Integer ? a.number == b.number : a.name == b.name;
}

std::strong_ordering operator<=>(const Term& a, const Term& b)
{
    if (auto c = a.kind <=> b.kind; c != 0)
        return c;
    if (a.kind == TermKind::Integer)
        return a.number <=> b.number;
    return a.name.compare(b.name) <=> 0;
}

bool Atom::is_ground() const
{
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b)
{
    if (auto c = a.predicate.compare(b.predicate) <=> 0; c != 0)
        return c;
    if (auto c = a.args.size() <=> b.args.size(); c != 0)
        return c;
    return a.args <=> b.args;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b)
{
    if (auto c = a.negated <=> b.negated; c != 0)
        return c;
    return a.atom <=> b.atom;
}

std::string_view to_string(Relation rel)
{
    switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
    case Relation::NotEqual: return "!=";
    }
    return "?";
}

std::strong_ordering operator<=>(const BodyLiteral& a, const BodyLiteral& b)
{
    if (auto c = a.naf <=> b.naf; c != 0)
        return c;
    return a.literal <=> b.literal;
}

std::strong_ordering operator<=>(const Comparison& a, const Comparison& b)
{
    if (auto c = a.lhs <=> b.lhs; c != 0)
        return c;
    if (auto c = a.rel <=> b.rel; c != 0)
        return c;
    return a.rhs <=> b.rhs;
}

bool evaluate(const Comparison& cmp)
{
    if (cmp.lhs.is_variable() || cmp.rhs.is_variable())
        throw Error(ErrorCode::NonGroundRule, "cannot evaluate a non-ground comparison");
    switch (cmp.rel) {
    case Relation::Equal: return cmp.lhs == cmp.rhs;
    case Relation::NotEqual: return !(cmp.lhs == cmp.rhs);
    default: break;
    }
    if (!cmp.lhs.is_integer() || !cmp.rhs.is_integer())
        return false;
    const auto l = cmp.lhs.number;
    const auto r = cmp.rhs.number;
    switch (cmp.rel) {
    case Relation::Less: return l < r;
    case Relation::LessEq: return l <= r;
    case Relation::Greater: return l > r;
    case Relation::GreaterEq: return l >= r;
    default: return false;
    }
}

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

namespace {

template <class T>
void sort_unique(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void collect_vars(const Term& t, std::vector<std::string>& out)
{
    if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end())
        out.push_back(t.name);
}

void collect_vars(const Atom& a, std::vector<std::string>& out)
{
    for (const auto& t : a.args)
        collect_vars(t, out);
}

Term substitute(const Term& t, const Substitution& s)
{
    if (!t.is_variable())
        return t;
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
}

Atom substitute(const Atom& a, const Substitution& s)
{
    Atom out(a.predicate);
    out.args.reserve(a.args.size());
    for (const auto& t : a.args)
        out.args.push_back(substitute(t, s));
    return out;
}

Literal substitute(const Literal& l, const Substitution& s)
{
    return Literal(substitute(l.atom, s), l.negated);
}

BodyElement substitute(const BodyElement& e, const Substitution& s)
{
    if (const auto* bl = std::get_if<BodyLiteral>(&e))
        return BodyLiteral{substitute(bl->literal, s), bl->naf};
    const auto& c = std::get<Comparison>(e);
    return Comparison{c.rel, substitute(c.lhs, s), substitute(c.rhs, s)};
}

Rule substitute(const Rule& r, const Substitution& s)
{
    std::vector<Literal> head;
    head.reserve(r.head().size());
    for (const auto& l : r.head())
        head.push_back(substitute(l, s));
    std::vector<BodyElement> body;
    body.reserve(r.body().size());
    for (const auto& e : r.body())
        body.push_back(substitute(e, s));
    return Rule(std::move(head), std::move(body));
}

std::string canonical_variable_name(std::size_t i)
{
    static const char* names[] = {"X", "Y", "Z", "U", "V", "W"};
    if (i < std::size(names))
        return names[i];
    return "X" + std::to_string(i);
}

// Permutation search is exact but factorial; above this many variables the
// first-occurrence heuristic is used instead.
constexpr std::size_t kExactCanonicalVars = 7;

} // namespace

Rule::Rule(std::vector<Literal> head, std::vector<BodyElement> body)
    : head_(std::move(head)), body_(std::move(body))
{
    sort_unique(head_);
    sort_unique(body_);
}

bool Rule::is_ground() const
{
    return variables().empty();
}

bool Rule::has_builtins() const
{
    return std::any_of(body_.begin(), body_.end(),
                       [](const BodyElement& e) { return std::holds_alternative<Comparison>(e); });
}

bool Rule::has_naf() const
{
    return std::any_of(body_.begin(), body_.end(), [](const BodyElement& e) {
        const auto* bl = std::get_if<BodyLiteral>(&e);
        return bl && bl->naf;
    });
}

std::vector<Literal> Rule::positive_body() const
{
    std::vector<Literal> out;
    for (const auto& e : body_)
        if (const auto* bl = std::get_if<BodyLiteral>(&e); bl && !bl->naf)
            out.push_back(bl->literal);
    return out;
}

std::vector<Literal> Rule::negative_body() const
{
    std::vector<Literal> out;
    for (const auto& e : body_)
        if (const auto* bl = std::get_if<BodyLiteral>(&e); bl && bl->naf)
            out.push_back(bl->literal);
    return out;
}

std::vector<std::string> Rule::variables() const
{
    std::vector<std::string> out;
    for (const auto& l : head_)
        collect_vars(l.atom, out);
    for (const auto& e : body_) {
        if (const auto* bl = std::get_if<BodyLiteral>(&e)) {
            collect_vars(bl->literal.atom, out);
        } else {
            const auto& c = std::get<Comparison>(e);
            collect_vars(c.lhs, out);
            collect_vars(c.rhs, out);
        }
    }
    return out;
}

Rule Rule::with_body_element(BodyElement elem) const
{
    auto body = body_;
    body.push_back(std::move(elem));
    return Rule(head_, std::move(body));
}

std::strong_ordering operator<=>(const Rule& a, const Rule& b)
{
    if (auto c = a.head_ <=> b.head_; c != 0)
        return c;
    return a.body_ <=> b.body_;
}

Rule instantiate(const Rule& rule, const Substitution& s)
{
    return substitute(rule, s);
}

Rule canonical_form(const Rule& rule)
{
    const auto vars = rule.variables();
    if (vars.empty())
        return rule;

    if (vars.size() > kExactCanonicalVars) {
        // Two rounds of first-occurrence renaming over the sorted rule.
        Rule current = rule;
        for (int round = 0; round < 2; ++round) {
            Substitution s;
            const auto order = current.variables();
            for (std::size_t i = 0; i < order.size(); ++i)
                s[order[i]] = Term::variable(canonical_variable_name(i));
            current = substitute(current, s);
        }
        return current;
    }

    std::vector<std::size_t> perm(vars.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rule best;
    bool have_best = false;
    do {
        Substitution s;
        for (std::size_t i = 0; i < vars.size(); ++i)
            s[vars[i]] = Term::variable(canonical_variable_name(perm[i]));
        Rule candidate = substitute(rule, s);
        if (!have_best || candidate < best) {
            best = std::move(candidate);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---------------------------------------------------------------------------
// Programs
// ---------------------------------------------------------------------------

Program::Program(std::initializer_list<Rule> rules)
{
    for (const auto& r : rules)
        insert(r);
}

Program::Program(const std::vector<Rule>& rules)
{
    for (const auto& r : rules)
        insert(r);
}

bool Program::insert(const Rule& rule)
{
    return rules_.insert(canonical_form(rule)).second;
}

bool Program::erase(const Rule& rule)
{
    return rules_.erase(canonical_form(rule)) > 0;
}

bool Program::contains(const Rule& rule) const
{
    return rules_.count(canonical_form(rule)) > 0;
}

void Program::insert_all(const Program& other)
{
    rules_.insert(other.rules_.begin(), other.rules_.end());
}

bool Program::is_ground() const
{
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_ground(); });
}

Universe constants(const Literal& l)
{
    Universe out;
    for (const auto& t : l.atom.args)
        if (!t.is_variable())
            out.insert(t);
    return out;
}

Universe constants(const Rule& r)
{
    Universe out;
    for (const auto& l : r.head())
        out.merge(constants(l));
    for (const auto& e : r.body()) {
        if (const auto* bl = std::get_if<BodyLiteral>(&e)) {
            out.merge(constants(bl->literal));
        } else {
            const auto& c = std::get<Comparison>(e);
            if (!c.lhs.is_variable())
                out.insert(c.lhs);
            if (!c.rhs.is_variable())
                out.insert(c.rhs);
        }
    }
    return out;
}

Universe constants(const Program& p)
{
    Universe out;
    for (const auto& r : p)
        out.merge(constants(r));
    return out;
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

namespace {

// Drops the instance if a comparison is false, otherwise strips comparisons.
bool finish_instance(const Rule& inst, std::vector<Rule>& out)
{
    if (!inst.has_builtins()) {
        out.push_back(inst);
        return true;
    }
    std::vector<BodyElement> body;
    for (const auto& e : inst.body()) {
        if (const auto* c = std::get_if<Comparison>(&e)) {
            if (!evaluate(*c))
                return false;
        } else {
            body.push_back(e);
        }
    }
    out.emplace_back(inst.head(), std::move(body));
    return true;
}

std::size_t instance_count(std::size_t universe, std::size_t vars, std::size_t cap)
{
    std::size_t n = 1;
    for (std::size_t i = 0; i < vars; ++i) {
        if (universe != 0 && n > cap / universe)
            return cap + 1;
        n *= universe;
    }
    return n;
}

void ground_into(const Rule& r, const std::vector<Term>& universe, const Limits& limits,
                 std::size_t& budget_used, std::vector<Rule>& out)
{
    const auto vars = r.variables();
    if (vars.empty()) {
        if (++budget_used > limits.max_ground_rules)
            throw Error(ErrorCode::GroundingBudgetExceeded,
                        "grounding exceeds " + std::to_string(limits.max_ground_rules) + " rules");
        finish_instance(r, out);
        return;
    }
    if (universe.empty())
        throw Error(ErrorCode::NoConstants,
                    "rule '" + to_string(r) + "' has variables but the program has no constants");

    const auto count = instance_count(universe.size(), vars.size(), limits.max_ground_rules);
    if (budget_used + count > limits.max_ground_rules)
        throw Error(ErrorCode::GroundingBudgetExceeded,
                    "grounding exceeds " + std::to_string(limits.max_ground_rules) + " rules");
    budget_used += count;

    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        Substitution s;
        for (std::size_t i = 0; i < vars.size(); ++i)
            s[vars[i]] = universe[idx[i]];
        finish_instance(substitute(r, s), out);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == universe.size())
            idx[k++] = 0;
        if (k == idx.size())
            break;
    }
}

} // namespace

std::vector<Rule> ground_instances(const Rule& r, const Universe& universe, const Limits& limits)
{
    const std::vector<Term> terms(universe.begin(), universe.end());
    std::size_t used = 0;
    std::vector<Rule> out;
    ground_into(r, terms, limits, used, out);
    for (auto& inst : out)
        inst = canonical_form(inst);
    return out;
}

Program ground(const Program& p, const Universe& universe, const Limits& limits)
{
    const std::vector<Term> terms(universe.begin(), universe.end());
    std::size_t used = 0;
    std::vector<Rule> out;
    for (const auto& r : p)
        ground_into(r, terms, limits, used, out);
    return Program(out);
}

Program ground(const Program& p, const Limits& limits)
{
    return ground(p, constants(p), limits);
}

Program program_union(const Program& p, const Program& q, const Limits& limits)
{
    auto u = constants(p);
    u.merge(constants(q));
    Program out = ground(p, u, limits);
    out.insert_all(ground(q, u, limits));
    return out;
}

Program program_diff(const Program& p, const Program& q, const Limits& limits)
{
    auto u = constants(p);
    u.merge(constants(q));
    const Program gq = ground(q, u, limits);
    Program out;
    for (const auto& r : ground(p, u, limits))
        if (!gq.contains(r))
            out.insert(r);
    return out;
}

bool instance_of(const Rule& ground_rule, const Program& p, const Universe& universe,
                 const Limits& limits)
{
    return ground(p, universe, limits).contains(ground_rule);
}

std::set<Literal> literal_universe(const Program& p, const Limits& limits)
{
    std::set<std::pair<std::string, std::size_t>> preds;
    auto note = [&](const Literal& l) { preds.emplace(l.atom.predicate, l.atom.args.size()); };
    for (const auto& r : p) {
        for (const auto& l : r.head())
            note(l);
        for (const auto& e : r.body())
            if (const auto* bl = std::get_if<BodyLiteral>(&e))
                note(bl->literal);
    }
    const auto u = constants(p);
    const std::vector<Term> terms(u.begin(), u.end());

    std::set<Literal> out;
    for (const auto& [name, arity] : preds) {
        if (arity > 0 && terms.empty())
            continue;
        const auto count = instance_count(terms.size(), arity, limits.max_ground_rules);
        if (out.size() + 2 * count > limits.max_ground_rules)
            throw Error(ErrorCode::GroundingBudgetExceeded,
                        "literal universe exceeds " + std::to_string(limits.max_ground_rules));
        std::vector<std::size_t> idx(arity, 0);
        for (;;) {
            Atom a(name);
            for (auto i : idx)
                a.args.push_back(terms[i]);
            out.insert(Literal(a, false));
            out.insert(Literal(a, true));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == terms.size())
                idx[k++] = 0;
            if (k == idx.size())
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string to_string(const Term& t)
{
    return t.is_integer() ? std::to_string(t.number) : t.name;
}

std::string to_string(const Atom& a)
{
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i)
                out += ',';
            out += to_string(a.args[i]);
        }
        out += ')';
    }
    return out;
}

std::string to_string(const Literal& l)
{
    return (l.negated ? "-" : "") + to_string(l.atom);
}

std::string to_string(const BodyElement& e)
{
    if (const auto* bl = std::get_if<BodyLiteral>(&e))
        return (bl->naf ? "not " : "") + to_string(bl->literal);
    const auto& c = std::get<Comparison>(e);
    return to_string(c.lhs) + " " + std::string(to_string(c.rel)) + " " + to_string(c.rhs);
}

std::string to_string(const Rule& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.head().size(); ++i) {
        if (i)
            out += " ; ";
        out += to_string(r.head()[i]);
    }
    if (!r.body().empty() || r.head().empty()) {
        out += r.head().empty() ? ":-" : " :-";
        for (std::size_t i = 0; i < r.body().size(); ++i)
            out += (i ? ", " : " ") + to_string(r.body()[i]);
    }
    out += '.';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << to_string(l); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << to_string(r); }

std::ostream& operator<<(std::ostream& os, const Program& p)
{
    for (const auto& r : p)
        os << r << '\n';
    return os;
}

} // namespace abdukit
