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

#include "abdukit/abduction.hpp"

#include <algorithm>

#include "abduction_internal.hpp"

namespace abdukit {

// ---------------------------------------------------------------------------
// Naming helpers
// ---------------------------------------------------------------------------

Literal reserved_literal(const std::string& role, const Literal& l)
{
    const std::string polarity = l.negated ? "_n_" : "_p_";
    return Literal(Atom("__" + role + polarity + l.atom.predicate, l.atom.args), false);
}

std::set<std::string> predicates(const Program& p)
{
    std::set<std::string> out;
    for (const auto& r : p) {
        for (const auto& l : r.head())
            out.insert(l.atom.predicate);
        for (const auto& e : r.body())
            if (const auto* bl = std::get_if<BodyLiteral>(&e))
                out.insert(bl->literal.atom.predicate);
    }
    return out;
}

std::string fresh_predicate(const std::string& base, const std::set<std::string>& used)
{
    if (!used.count(base))
        return base;
    for (std::size_t k = 1;; ++k)
        if (!used.count(base + std::to_string(k)))
            return base + std::to_string(k);
}

// ---------------------------------------------------------------------------
// Structural assumptions
// ---------------------------------------------------------------------------

std::set<Literal> abducible_literals(const Program& abducibles)
{
    std::set<Literal> out;
    for (const auto& r : abducibles)
        if (r.is_fact())
            out.insert(r.head().front());
    return out;
}

namespace {

bool meets(const Rule& r, const std::set<Literal>& lits)
{
    return std::any_of(r.head().begin(), r.head().end(), [&](const Literal& l) { return lits.count(l); });
}

bool fact_of(const Rule& r, const std::set<Literal>& lits)
{
    return r.is_disjunctive_fact() &&
           std::all_of(r.head().begin(), r.head().end(), [&](const Literal& l) { return lits.count(l); });
}

template <typename F>
void for_each_checked_rule(const AbductiveProgram& ap, F&& f)
{
    for (const auto& r : ap.program)
        f(r);
    for (const auto& r : ap.abducibles)
        if (!r.is_fact())
            f(r);
}

} // namespace

bool satisfies_head_abducible_assumption(const AbductiveProgram& ap)
{
    const auto abd = abducible_literals(ap.abducibles);
    bool ok = true;
    for_each_checked_rule(ap, [&](const Rule& r) {
        if (meets(r, abd) && !fact_of(r, abd))
            ok = false;
    });
    return ok;
}

bool satisfies_disjunctive_fact_assumption(const AbductiveProgram& ap)
{
    const auto abd = abducible_literals(ap.abducibles);
    return std::all_of(ap.program.begin(), ap.program.end(), [&](const Rule& r) {
        return !fact_of(r, abd) || ap.abducibles.contains(r);
    });
}

AbductiveProgram establish_disjunctive_fact_assumption(const AbductiveProgram& ap)
{
    const auto abd = abducible_literals(ap.abducibles);
    AbductiveProgram out = ap;
    for (const auto& r : ap.program)
        if (fact_of(r, abd))
            out.abducibles.insert(r);
    return out;
}

AbductiveProgram normalize_abducible_heads(const AbductiveProgram& ap, std::map<Rule, Rule>* origin)
{
    const auto abd = abducible_literals(ap.abducibles);
    std::set<Literal> offenders;
    for_each_checked_rule(ap, [&](const Rule& r) {
        if (!meets(r, abd) || fact_of(r, abd))
            return;
        for (const auto& l : r.head())
            if (abd.count(l))
                offenders.insert(l);
    });
    if (offenders.empty())
        return ap;

    auto rename = [&](const Rule& r) {
        if (!fact_of(r, abd))
            return r;
        std::vector<Literal> head;
        for (const auto& l : r.head())
            head.push_back(offenders.count(l) ? reserved_literal("prime", l) : l);
        return canonical_form(Rule(std::move(head), {}));
    };

    AbductiveProgram out;
    for (const auto& r : ap.program)
        out.program.insert(rename(r));
    for (const auto& a : offenders)
        out.program.insert(Rule({a}, {BodyLiteral{reserved_literal("prime", a), false}}));
    for (const auto& r : ap.abducibles) {
        const Rule renamed = rename(r);
        out.abducibles.insert(renamed);
        if (origin && renamed != r)
            (*origin)[renamed] = r;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normal form
// ---------------------------------------------------------------------------

void NameMap::add(const Rule& source, const Literal& name)
{
    const Rule r = canonical_form(source);
    names_[r] = name;
    by_predicate_[name.atom.predicate] = {r, name};
}

Rule NameMap::source_of(const Literal& name) const
{
    auto it = by_predicate_.find(name.atom.predicate);
    if (it == by_predicate_.end())
        return Rule::fact(name);
    const auto& [rule, pattern] = it->second;
    Substitution s;
    for (std::size_t i = 0; i < pattern.atom.args.size() && i < name.atom.args.size(); ++i)
        if (pattern.atom.args[i].is_variable())
            s[pattern.atom.args[i].name] = name.atom.args[i];
    return canonical_form(instantiate(rule, s));
}

std::optional<Literal> NameMap::name_of(const Rule& rule) const
{
    auto it = names_.find(canonical_form(rule));
    if (it != names_.end())
        return it->second;
    if (rule.is_fact())
        return rule.head().front();
    return std::nullopt;
}

std::pair<AbductiveProgram, NameMap> normal_form(const AbductiveProgram& ap)
{
    auto used = predicates(ap.program);
    used.merge(predicates(ap.abducibles));

    AbductiveProgram out{ap.program, {}};
    NameMap names;
    std::size_t k = 1;
    for (const auto& r : ap.abducibles) {
        if (r.is_fact()) {
            out.abducibles.insert(r);
            continue;
        }
        std::string pred;
        do {
            pred = "__g" + std::to_string(k++);
        } while (used.count(pred));
        Atom gamma(pred);
        for (const auto& v : r.variables())
            gamma.args.push_back(Term::variable(v));
        const Literal name(gamma, false);

        if (out.program.erase(r))
            out.program.insert(Rule::fact(name));
        out.program.insert(r.with_body_element(BodyLiteral{name, false}));
        out.abducibles.insert(Rule::fact(name));
        names.add(r, name);
    }
    return {std::move(out), std::move(names)};
}

// ---------------------------------------------------------------------------
// Update programs
// ---------------------------------------------------------------------------

std::set<Literal> UpdateProgram::update_atoms() const
{
    std::set<Literal> out = ua_plus;
    out.insert(ua_minus.begin(), ua_minus.end());
    return out;
}

UpdateProgram build_update_program(const AbductiveProgram& ap, Encoding encoding, const Limits& limits,
                                   const Universe& extra)
{
    auto u = constants(ap.program);
    u.merge(constants(ap.abducibles));
    u.insert(extra.begin(), extra.end());

    UpdateProgram up;
    up.source = {ground(ap.program, u, limits), ground(ap.abducibles, u, limits)};
    for (const auto& r : up.source.abducibles)
        if (!r.is_fact())
            throw Error(ErrorCode::InvalidArgument,
                        "update programs need fact abducibles; found " + to_string(r));

    for (const auto& r : up.source.program)
        if (!up.source.abducibles.contains(r))
            up.rules.insert(r);

    for (const auto& a : abducible_literals(up.source.abducibles)) {
        const Literal bar = reserved_literal("bar", a);
        up.shadows.insert(bar);
        if (encoding == Encoding::NafPair) {
            up.rules.insert(Rule({a}, {BodyLiteral{bar, true}}));
            up.rules.insert(Rule({bar}, {BodyLiteral{a, true}}));
        } else {
            up.rules.insert(Rule({a, bar}, {}));
        }
        if (up.source.program.contains(Rule::fact(a))) {
            const Literal minus = reserved_literal("minus", a);
            up.rules.insert(Rule({minus}, {BodyLiteral{a, true}}));
            up.ua_minus.insert(minus);
            up.abducible_of[minus] = a;
        } else {
            const Literal plus = reserved_literal("plus", a);
            up.rules.insert(Rule({plus}, {BodyLiteral{a, false}}));
            up.ua_plus.insert(plus);
            up.abducible_of[plus] = a;
        }
    }
    return up;
}

namespace {

std::set<Literal> project(const Interpretation& s, const std::set<Literal>& ua)
{
    std::set<Literal> out;
    for (const auto& l : s.literals())
        if (ua.count(l))
            out.insert(l);
    return out;
}

bool strict_subset(const std::set<Literal>& a, const std::set<Literal>& b)
{
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

AnswerSetResult u_minimal_filter(const AnswerSetResult& result, const std::set<Literal>& ua)
{
    std::vector<std::set<Literal>> projections;
    std::vector<const Interpretation*> sets;
    for (const auto& s : result.sets) {
        if (s.is_contradictory())
            continue;
        sets.push_back(&s);
        projections.push_back(project(s, ua));
    }
    std::vector<Interpretation> kept;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const bool dominated = std::any_of(projections.begin(), projections.end(), [&](const auto& t) {
            return strict_subset(t, projections[i]);
        });
        if (!dominated)
            kept.push_back(*sets[i]);
    }
    return make_result(std::move(kept));
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

bool delta_less(const Explanation& a, const Explanation& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    if (a.add != b.add)
        return a.add < b.add;
    return a.remove < b.remove;
}

Rule Pipeline::to_source(const Literal& abducible) const
{
    auto it = origin.find(Rule::fact(abducible));
    const Literal named = it == origin.end() ? abducible : it->second.head().front();
    return update.name_map.source_of(named);
}

Pipeline prepare(const AbductiveProgram& ap, const Universe& extra, const Options& options)
{
    Pipeline pl;
    pl.universe = constants(ap.program);
    pl.universe.merge(constants(ap.abducibles));
    pl.universe.insert(extra.begin(), extra.end());

    const AbductiveProgram grounded{ground(ap.program, pl.universe, options.limits),
                                    ground(ap.abducibles, pl.universe, options.limits)};
    pl.source = establish_disjunctive_fact_assumption(grounded);
    // Naming comes first: priming an abducible inside a disjunctive fact
    // would change which models are minimal.
    auto [named, names] = normal_form(pl.source);
    pl.named = std::move(named);
    pl.normal = normalize_abducible_heads(pl.named, &pl.origin);
    pl.update = build_update_program(pl.normal, options.encoding, options.limits);
    pl.update.name_map = std::move(names);
    return pl;
}

namespace detail {

Universe observation_constants(const Observation& g)
{
    return g.kind == Observation::Kind::Bot ? Universe{} : constants(g.literal);
}

void check_observation_literal(const AbductiveProgram& ap, const Literal& l, const Limits& limits)
{
    if (!l.is_ground())
        throw Error(ErrorCode::InvalidArgument, "observation must be ground: " + to_string(l));
    auto u = constants(ap.program);
    u.merge(constants(ap.abducibles));
    u.merge(constants(l));
    if (abducible_literals(ground(ap.abducibles, u, limits)).count(l))
        throw Error(ErrorCode::AbducibleObservation, "observation is an abducible: " + to_string(l));
}

void check_observation(const AbductiveProgram& ap, const Observation& g, const Limits& limits)
{
    if (g.kind != Observation::Kind::Bot)
        check_observation_literal(ap, g.literal, limits);
}

std::vector<Explanation> finish(std::vector<Explanation> found, Mode mode, bool minimal_only)
{
    std::sort(found.begin(), found.end(), delta_less);
    found.erase(std::unique(found.begin(), found.end(),
                            [](const Explanation& a, const Explanation& b) { return a.same_delta(b); }),
                found.end());
    auto includes = [](const Program& big, const Program& small) {
        return std::all_of(small.begin(), small.end(), [&](const Rule& r) { return big.contains(r); });
    };
    std::vector<Explanation> out;
    for (auto& e : found) {
        e.mode = mode;
        e.minimal = std::none_of(found.begin(), found.end(), [&](const Explanation& o) {
            return o.size() < e.size() && includes(e.add, o.add) && includes(e.remove, o.remove);
        });
        if (!minimal_only || e.minimal)
            out.push_back(e);
    }
    return out;
}

AbductiveProgram with_unless(const AbductiveProgram& ap, const Literal& g, Literal& unless)
{
    auto used = predicates(ap.program);
    used.merge(predicates(ap.abducibles));
    unless = Literal(Atom(fresh_predicate("__unless", used)), false);
    AbductiveProgram out = ap;
    out.program.insert(Rule({unless}, {BodyLiteral{g, true}}));
    return out;
}

} // namespace detail

namespace {

Explanation extract(const Pipeline& pl, const Interpretation& s)
{
    Explanation e;
    for (const auto& l : s.literals()) {
        if (pl.update.ua_plus.count(l))
            e.add.insert(pl.to_source(pl.update.abducible_of.at(l)));
        else if (pl.update.ua_minus.count(l))
            e.remove.insert(pl.to_source(pl.update.abducible_of.at(l)));
    }
    return e;
}

// (P \ F) u E u { <- G } is inconsistent, evaluated on the normal form.
bool skeptically_entailed(const Pipeline& pl, const Interpretation& s, const Literal& g, const Limits& limits)
{
    Program p = pl.normal.program;
    for (const auto& l : s.literals()) {
        auto it = pl.update.abducible_of.find(l);
        if (it == pl.update.abducible_of.end())
            continue;
        if (pl.update.ua_plus.count(l))
            p.insert(Rule::fact(it->second));
        else
            p.erase(Rule::fact(it->second));
    }
    p.insert(Rule::constraint({BodyLiteral{g, false}}));
    return !answer_sets(p, limits).consistent();
}

std::vector<Interpretation> consistent_sets(const AnswerSetResult& r)
{
    std::vector<Interpretation> out;
    for (const auto& s : r.sets)
        if (!s.is_contradictory())
            out.push_back(s);
    return out;
}

std::vector<Explanation> collect(const Pipeline& pl, const std::vector<Interpretation>& sets, Mode mode,
                                 bool minimal)
{
    std::vector<Explanation> found;
    for (const auto& s : sets)
        found.push_back(extract(pl, s));
    return detail::finish(std::move(found), mode, minimal);
}

} // namespace

std::vector<Explanation> explanations(const AbductiveProgram& ap, const Observation& g, Mode mode, bool minimal,
                                      const Options& options)
{
    if (g.kind != Observation::Kind::Positive)
        throw Error(ErrorCode::InvalidArgument, "explanations need a positive observation");
    detail::check_observation(ap, g, options.limits);

    const Pipeline pl = prepare(ap, constants(g.literal), options);
    Program up = pl.update.rules;
    up.insert(Rule::constraint({BodyLiteral{g.literal, true}}));
    auto sets = consistent_sets(answer_sets(up, options.limits));

    if (mode == Mode::Skeptical) {
        std::erase_if(sets, [&](const Interpretation& s) {
            return !skeptically_entailed(pl, s, g.literal, options.limits);
        });
    }
    if (minimal)
        sets = u_minimal_filter(make_result(std::move(sets)), pl.update.update_atoms()).sets;
    return collect(pl, sets, mode, minimal);
}

std::vector<Explanation> anti_explanations(const AbductiveProgram& ap, const Observation& g, Mode mode,
                                           bool minimal, const Options& options)
{
    if (g.kind == Observation::Kind::Positive)
        throw Error(ErrorCode::InvalidArgument, "anti-explanations need a negative observation or Bot");
    if (g.kind == Observation::Kind::Bot && mode == Mode::Skeptical)
        throw Error(ErrorCode::SkepticalBotUnsupported,
                    "skeptical anti-explanations of Bot are not defined; use credulous mode");
    detail::check_observation(ap, g, options.limits);

    if (mode == Mode::Skeptical) {
        Literal unless;
        const auto extended = detail::with_unless(ap, g.literal, unless);
        return explanations(extended, Observation::positive(unless), Mode::Skeptical, minimal, options);
    }

    const Pipeline pl = prepare(ap, detail::observation_constants(g), options);
    Program up = pl.update.rules;
    if (g.kind == Observation::Kind::Negative)
        up.insert(Rule::constraint({BodyLiteral{g.literal, false}}));
    auto result = answer_sets(up, options.limits);
    auto sets = minimal ? u_minimal_filter(result, pl.update.update_atoms()).sets : consistent_sets(result);
    return collect(pl, sets, mode, minimal);
}

std::vector<Explanation> solve(const AbductiveProgram& ap, const Observation& g, Mode mode, bool minimal,
                               const Options& options)
{
    if (g.kind == Observation::Kind::Positive)
        return explanations(ap, g, mode, minimal, options);
    return anti_explanations(ap, g, mode, minimal, options);
}

std::pair<AbductiveProgram, Observation> compile_observations(const AbductiveProgram& ap,
                                                              const std::vector<Literal>& positives,
                                                              const std::vector<Literal>& negatives)
{
    if (positives.empty() && negatives.empty())
        throw Error(ErrorCode::InvalidArgument, "no observations given");
    for (const auto& l : positives)
        detail::check_observation_literal(ap, l, {});
    for (const auto& l : negatives)
        detail::check_observation_literal(ap, l, {});

    auto used = predicates(ap.program);
    used.merge(predicates(ap.abducibles));
    const Literal goal(Atom(fresh_predicate("__goal", used)), false);
    std::vector<BodyElement> body;
    for (const auto& l : positives)
        body.push_back(BodyLiteral{l, false});
    for (const auto& l : negatives)
        body.push_back(BodyLiteral{l, true});
    AbductiveProgram out = ap;
    out.program.insert(Rule({goal}, std::move(body)));
    return {std::move(out), Observation::positive(goal)};
}

// ---------------------------------------------------------------------------
// Normal abduction
// ---------------------------------------------------------------------------

std::pair<AbductiveProgram, std::map<Literal, Literal>> to_normal_abduction(const AbductiveProgram& ap,
                                                                           const Limits& limits)
{
    auto u = constants(ap.program);
    u.merge(constants(ap.abducibles));
    const Program gp = ground(ap.program, u, limits);
    const Program ga = ground(ap.abducibles, u, limits);

    AbductiveProgram out;
    std::map<Literal, Literal> alt_of;
    for (const auto& r : gp)
        if (!ga.contains(r))
            out.program.insert(r);
    for (const auto& r : ga) {
        if (!r.is_fact())
            throw Error(ErrorCode::InvalidArgument,
                        "normal abduction needs fact abducibles; found " + to_string(r));
        const Literal& a = r.head().front();
        if (gp.contains(r)) {
            const Literal alt = reserved_literal("alt", a);
            out.program.insert(Rule({a}, {BodyLiteral{alt, true}}));
            out.abducibles.insert(Rule::fact(alt));
            alt_of[alt] = a;
        } else {
            out.abducibles.insert(r);
        }
    }
    return {std::move(out), std::move(alt_of)};
}

std::vector<Explanation> normal_abduction_explanations(const AbductiveProgram& ap, const Observation& g,
                                                       Mode mode, bool minimal, const Options& options)
{
    if (g.kind == Observation::Kind::Bot && mode == Mode::Skeptical)
        throw Error(ErrorCode::SkepticalBotUnsupported,
                    "skeptical anti-explanations of Bot are not defined; use credulous mode");
    detail::check_observation(ap, g, options.limits);

    AbductiveProgram base = ap;
    Observation obs = g;
    if (g.kind == Observation::Kind::Negative) {
        Literal unless;
        base = detail::with_unless(ap, g.literal, unless);
        obs = Observation::positive(unless);
    }

    const Pipeline pl = prepare(base, detail::observation_constants(obs), options);
    const auto [na, alt_of] = to_normal_abduction(pl.normal, options.limits);
    const auto hyp_set = abducible_literals(na.abducibles);
    const std::vector<Literal> hyps(hyp_set.begin(), hyp_set.end());
    if (hyps.size() > options.oracle_cap)
        throw Error(ErrorCode::OracleBudgetExceeded,
                    std::to_string(hyps.size()) + " hypotheses exceed the oracle cap of " +
                        std::to_string(options.oracle_cap));

    std::vector<Explanation> found;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << hyps.size()); ++mask) {
        Program p = na.program;
        for (std::size_t i = 0; i < hyps.size(); ++i)
            if ((mask >> i) & 1U)
                p.insert(Rule::fact(hyps[i]));
        const auto result = answer_sets(p, options.limits);
        if (!result.consistent())
            continue;
        bool holds = true;
        if (obs.kind == Observation::Kind::Positive) {
            auto has_g = [&](const Interpretation& s) { return s.contains(obs.literal); };
            holds = mode == Mode::Skeptical ? std::all_of(result.sets.begin(), result.sets.end(), has_g)
                                            : std::any_of(result.sets.begin(), result.sets.end(), has_g);
        }
        if (!holds)
            continue;
        Explanation e;
        for (std::size_t i = 0; i < hyps.size(); ++i) {
            if (!((mask >> i) & 1U))
                continue;
            auto it = alt_of.find(hyps[i]);
            if (it == alt_of.end())
                e.add.insert(pl.to_source(hyps[i]));
            else
                e.remove.insert(pl.to_source(it->second));
        }
        found.push_back(std::move(e));
    }
    return detail::finish(std::move(found), mode, minimal);
}

// ---------------------------------------------------------------------------
// Deltas
// ---------------------------------------------------------------------------

Program apply_delta(const Program& p, const Program& add, const Program& remove, const Universe& universe,
                    const Limits& limits)
{
    Program out;
    bool non_ground = false;
    for (const auto& r : p) {
        if (r.is_ground() && !r.has_builtins()) {
            if (!remove.contains(r))
                out.insert(r);
            continue;
        }
        const auto instances = ground_instances(r, universe, limits);
        const bool touched = std::any_of(instances.begin(), instances.end(),
                                         [&](const Rule& i) { return remove.contains(i); });
        if (!touched) {
            out.insert(r);
            non_ground = non_ground || !r.is_ground();
            continue;
        }
        for (const auto& i : instances)
            if (!remove.contains(i))
                out.insert(i);
    }
    out.insert_all(add);
    if (non_ground && constants(out) != universe)
        return ground(out, universe, limits);
    return out;
}

std::string to_string(const Explanation& e)
{
    auto list = [](const Program& p) {
        std::string out = "{";
        bool first = true;
        for (const auto& r : p) {
            out += first ? "" : " ";
            out += to_string(r);
            first = false;
        }
        return out + "}";
    };
    return "(" + list(e.add) + ", " + list(e.remove) + ")";
}

} // namespace abdukit
