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

#include "abdukit/updates.hpp"

#include <algorithm>

namespace abdukit {

std::string_view to_string(UpdateKind kind)
{
    switch (kind) {
    case UpdateKind::ViewInsert: return "view-insert";
    case UpdateKind::ViewDelete: return "view-delete";
    case UpdateKind::Integrity: return "integrity";
    case UpdateKind::Theory: return "theory";
    case UpdateKind::RuleInsert: return "rule-insert";
    case UpdateKind::RuleDelete: return "rule-delete";
    case UpdateKind::InconsistencyRemoval: return "inconsistency-removal";
    }
    return "unknown";
}

namespace {

Universe universe_of(std::initializer_list<const Program*> programs)
{
    Universe u;
    for (const auto* p : programs)
        u.merge(constants(*p));
    return u;
}

UpdateResult to_result(const Program& p, const std::vector<Explanation>& deltas, UpdateKind kind,
                       const Universe& universe, const Limits& limits)
{
    UpdateResult out;
    for (const auto& e : deltas)
        out.solutions.push_back({apply_delta(p, e.add, e.remove, universe, limits), e, kind});
    return out;
}

UpdateResult unchanged(const Program& p, UpdateKind kind)
{
    Explanation none;
    none.minimal = true;
    UpdateResult out;
    out.solutions.push_back({p, none, kind});
    return out;
}

void note_unknown_predicate(const Program& p, const Program& v, const Literal& g, UpdateResult& result)
{
    auto known = [&](const Program& prog) {
        return std::any_of(prog.begin(), prog.end(), [&](const Rule& r) {
            auto same = [&](const Literal& l) {
                return l.atom.predicate == g.atom.predicate && l.atom.args.size() == g.atom.args.size();
            };
            const auto pos = r.positive_body();
            const auto neg = r.negative_body();
            return std::any_of(r.head().begin(), r.head().end(), same) ||
                   std::any_of(pos.begin(), pos.end(), same) || std::any_of(neg.begin(), neg.end(), same);
        });
    };
    if (!known(p) && !known(v))
        result.diagnostics.push_back("predicate " + g.atom.predicate + "/" +
                                     std::to_string(g.atom.args.size()) + " does not occur in the program");
}

UpdateResult view_update(const Program& p, const Program& v, const Literal& g, const Options& options,
                         UpdateKind kind)
{
    const AbductiveProgram ap{p, v};
    const auto deltas = kind == UpdateKind::ViewInsert
                            ? explanations(ap, Observation::positive(g), Mode::Skeptical, true, options)
                            : anti_explanations(ap, Observation::negative(g), Mode::Credulous, true, options);
    auto u = universe_of({&p, &v});
    u.merge(constants(g));
    auto result = to_result(p, deltas, kind, u, options.limits);
    if (result.solutions.empty())
        note_unknown_predicate(p, v, g, result);
    return result;
}

bool mentions(const Rule& r, const std::string& predicate)
{
    auto hit = [&](const Literal& l) { return l.atom.predicate == predicate; };
    const auto pos = r.positive_body();
    const auto neg = r.negative_body();
    return std::any_of(r.head().begin(), r.head().end(), hit) || std::any_of(pos.begin(), pos.end(), hit) ||
           std::any_of(neg.begin(), neg.end(), hit);
}

UpdateResult theory_update_as(const Program& p, const Program& q, const Options& options, UpdateKind kind)
{
    const auto u = universe_of({&p, &q});
    if (!consistent(q, options.limits, u)) {
        UpdateResult out;
        out.diagnostics.push_back("the update program is inconsistent on its own");
        return out;
    }
    Program pq = p;
    pq.insert_all(q);

    // Relative to P, the new rules are the additions.
    Explanation added;
    const Program gp = ground(p, u, options.limits);
    for (const auto& r : ground(q, u, options.limits))
        if (!gp.contains(r))
            added.add.insert(r);

    if (consistent(pq, options.limits, u)) {
        added.minimal = true;
        return {{{pq, added, kind}}, {}};
    }

    const AbductiveProgram ap{pq, program_diff(p, q, options.limits)};
    UpdateResult out;
    for (auto e : anti_explanations(ap, Observation::bot(), Mode::Credulous, true, options)) {
        Program updated = apply_delta(pq, {}, e.remove, u, options.limits);
        e.add = added.add;
        out.solutions.push_back({std::move(updated), std::move(e), kind});
    }
    return out;
}

} // namespace

UpdateResult view_insert(const Program& p, const Program& v, const Literal& g, const Options& options)
{
    return view_update(p, v, g, options, UpdateKind::ViewInsert);
}

UpdateResult view_delete(const Program& p, const Program& v, const Literal& g, const Options& options)
{
    return view_update(p, v, g, options, UpdateKind::ViewDelete);
}

UpdateResult maintain_integrity(const Program& p, const Program& v, const Options& options)
{
    const auto u = universe_of({&p, &v});
    const Program gv = ground(v, u, options.limits);
    for (const auto& r : ground(p, u, options.limits))
        if (r.is_constraint() && gv.contains(r))
            throw Error(ErrorCode::ConstraintInVariablePart,
                        "integrity constraint " + to_string(r) + " is in the variable part");
    if (consistent(p, options.limits, u))
        return unchanged(p, UpdateKind::Integrity);
    const auto deltas = anti_explanations({p, v}, Observation::bot(), Mode::Credulous, true, options);
    return to_result(p, deltas, UpdateKind::Integrity, u, options.limits);
}

UpdateResult theory_update(const Program& p, const Program& q, const Options& options)
{
    return theory_update_as(p, q, options, UpdateKind::Theory);
}

UpdateResult insert_rule(const Program& p, const Rule& r, const Options& options)
{
    if (p.contains(r))
        throw Error(ErrorCode::RuleAlreadyPresent, "rule already in the program: " + to_string(r));
    return theory_update_as(p, Program{r}, options, UpdateKind::RuleInsert);
}

UpdateResult delete_rule(const Program& p, const Rule& r, const Options& options)
{
    if (!p.contains(r))
        throw Error(ErrorCode::RuleNotPresent, "rule not in the program: " + to_string(r));

    // Name the rule with a fact, then insert the constraint forbidding the
    // name.
    const Literal del(Atom(fresh_predicate("__del", predicates(p))), false);
    Program pr = p;
    pr.erase(r);
    pr.insert(r.with_body_element(BodyLiteral{del, false}));
    pr.insert(Rule::fact(del));
    const auto inserted =
        theory_update_as(pr, Program{Rule::constraint({BodyLiteral{del, false}})}, options, UpdateKind::RuleDelete);

    UpdateResult out;
    out.diagnostics = inserted.diagnostics;
    for (const auto& sol : inserted.solutions) {
        UpdateSolution mapped;
        mapped.kind = UpdateKind::RuleDelete;
        for (const auto& rule : sol.updated_program)
            if (!mentions(rule, del.atom.predicate))
                mapped.updated_program.insert(rule);
        mapped.delta.mode = sol.delta.mode;
        mapped.delta.minimal = sol.delta.minimal;
        mapped.delta.remove.insert(r);
        for (const auto& rule : sol.delta.remove)
            if (!mentions(rule, del.atom.predicate))
                mapped.delta.remove.insert(rule);
        out.solutions.push_back(std::move(mapped));
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const UpdateSolution& a, const UpdateSolution& b) { return delta_less(a.delta, b.delta); });
    return out;
}

UpdateResult remove_inconsistency(const Program& p, RepairScope scope, const Program& subset,
                                  const Options& options)
{
    const auto u = universe_of({&p});
    Program abducibles;
    switch (scope) {
    case RepairScope::AllRules:
        abducibles = p;
        break;
    case RepairScope::Subset: {
        const Program gp = ground(p, u, options.limits);
        for (const auto& r : subset) {
            const bool inside = p.contains(r) || (r.is_ground() && gp.contains(r));
            if (!inside)
                throw Error(ErrorCode::ScopeNotSubset, "rule is not part of the program: " + to_string(r));
        }
        abducibles = subset;
        break;
    }
    case RepairScope::FactUniverse:
        for (const auto& l : literal_universe(p, options.limits))
            abducibles.insert(Rule::fact(l));
        break;
    }
    if (consistent(p, options.limits, u))
        return unchanged(p, UpdateKind::InconsistencyRemoval);
    const auto deltas = anti_explanations({p, abducibles}, Observation::bot(), Mode::Credulous, true, options);
    return to_result(p, deltas, UpdateKind::InconsistencyRemoval, u, options.limits);
}

MultiSolutionProgram multi_solution_program(const Program& p, const Program& q, const Limits& limits)
{
    auto used = predicates(p);
    used.merge(predicates(q));
    Program pi = q;
    std::set<std::string> keep_predicates;
    std::size_t k = 1;
    for (const auto& r : p) {
        if (q.contains(r))
            continue;
        std::string pred;
        do {
            pred = "__keep" + std::to_string(k++);
        } while (used.count(pred));
        keep_predicates.insert(pred);
        Atom keep(pred);
        for (const auto& v : r.variables())
            keep.args.push_back(Term::variable(v));
        const Literal gamma(keep, false);
        const Literal bar = reserved_literal("bar", gamma);
        pi.insert(r.with_body_element(BodyLiteral{gamma, false}));
        pi.insert(Rule({gamma}, {BodyLiteral{bar, true}}));
        pi.insert(Rule({bar}, {BodyLiteral{gamma, true}}));
    }

    auto u = constants(p);
    u.merge(constants(q));
    MultiSolutionProgram out;
    out.pi = ground(pi, u, limits);
    for (const auto& r : out.pi)
        for (const auto& l : r.head())
            if (keep_predicates.count(l.atom.predicate))
                out.delta_atoms.insert(l);
    return out;
}

AnswerSetResult delta_maximal_answer_sets(const MultiSolutionProgram& m, const Limits& limits)
{
    const auto result = answer_sets(m.pi, limits);
    std::vector<std::set<Literal>> projections;
    std::vector<const Interpretation*> sets;
    for (const auto& s : result.sets) {
        if (s.is_contradictory())
            continue;
        std::set<Literal> proj;
        for (const auto& l : s.literals())
            if (m.delta_atoms.count(l))
                proj.insert(l);
        sets.push_back(&s);
        projections.push_back(std::move(proj));
    }
    std::vector<Interpretation> kept;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& mine = projections[i];
        const bool dominated = std::any_of(projections.begin(), projections.end(), [&](const auto& other) {
            return other.size() > mine.size() && std::includes(other.begin(), other.end(), mine.begin(), mine.end());
        });
        if (!dominated)
            kept.push_back(*sets[i]);
    }
    return make_result(std::move(kept));
}

} // namespace abdukit
