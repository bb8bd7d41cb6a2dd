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

#ifndef ABDUKIT_ABDUCTION_HPP
#define ABDUKIT_ABDUCTION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abdukit/core.hpp"
#include "abdukit/solver.hpp"

namespace abdukit {

/// An abductive program <P, A>. Non-ground rules stand for their ground
/// instances over the constants of P, A and the observation.
struct AbductiveProgram {
    Program program;
    Program abducibles;

    friend bool operator==(const AbductiveProgram&, const AbductiveProgram&) = default;
};

enum class Mode { Credulous, Skeptical };
enum class Encoding { NafPair, DisjunctiveFact };

struct Options {
    Limits limits;
    Encoding encoding = Encoding::NafPair;
    /// Cap on ground hypotheses for the brute-force and normal-abduction
    /// routes.
    std::size_t oracle_cap = 12;
};

/// Literals L such that the fact L <- is an abducible.
std::set<Literal> abducible_literals(const Program& abducibles);

/// A rule whose head meets the abducible literals is a (disjunctive) fact of
/// abducibles. Checked on the rules of P and the non-fact abducibles.
bool satisfies_head_abducible_assumption(const AbductiveProgram& ap);
/// Every disjunctive fact of P built from abducible literals is itself an
/// abducible.
bool satisfies_disjunctive_fact_assumption(const AbductiveProgram& ap);

/// Adds every disjunctive fact of P made of abducible literals to A.
AbductiveProgram establish_disjunctive_fact_assumption(const AbductiveProgram& ap);

/// For each abducible literal A heading a rule that is not a fact of
/// abducibles, introduces a fresh abducible A', the rule A <- A', and
/// replaces A by A' in every fact of abducibles of P and A. When `origin` is
/// given it receives new abducible -> replaced abducible for renamed facts.
AbductiveProgram normalize_abducible_heads(const AbductiveProgram& ap,
                                           std::map<Rule, Rule>* origin = nullptr);

/// Bijection between abducible rules and their name atoms. Abducible facts
/// are their own names.
class NameMap {
public:
    void add(const Rule& source, const Literal& name);

    /// Source rule of a (possibly ground) name, or the fact itself for an
    /// unnamed literal.
    Rule source_of(const Literal& name) const;
    /// Name of a rule; a fact L <- is named L.
    std::optional<Literal> name_of(const Rule& rule) const;

    const std::map<Rule, Literal>& names() const noexcept { return names_; }
    bool empty() const noexcept { return names_.empty(); }

    friend bool operator==(const NameMap&, const NameMap&) = default;

private:
    std::map<Rule, Literal> names_;
    std::map<std::string, std::pair<Rule, Literal>> by_predicate_;
};

/// Names every abducible that is not a single-literal fact: R becomes
/// R with gamma_R appended to its body (plus the fact gamma_R <- when R is in
/// P) and gamma_R replaces R among the abducibles. Names are `__g<k>` over
/// the variables of R.
std::pair<AbductiveProgram, NameMap> normal_form(const AbductiveProgram& ap);

/// A program with its update atoms.
struct UpdateProgram {
    Program rules;                   // UP, ground
    std::set<Literal> ua_plus;       // +a for a in A \ P
    std::set<Literal> ua_minus;      // -a for a in A n P
    std::set<Literal> shadows;       // the complementary atom of each abducible
    std::map<Literal, Literal> abducible_of;   // update atom -> abducible
    NameMap name_map;
    AbductiveProgram source;         // ground, fact-only abducibles

    std::set<Literal> update_atoms() const;
};

/// Builds UP = (P \ A) u UR over the ground instantiation of `ap`, whose
/// abducibles must all be facts.
UpdateProgram build_update_program(const AbductiveProgram& ap, Encoding encoding = Encoding::NafPair,
                                   const Limits& limits = {}, const Universe& extra = {});

/// Consistent answer sets whose update-atom projection has no strict subset
/// among the projections of the other consistent answer sets.
AnswerSetResult u_minimal_filter(const AnswerSetResult& result, const std::set<Literal>& ua);

struct Observation {
    enum class Kind { Positive, Negative, Bot };
    Kind kind = Kind::Bot;
    Literal literal;

    static Observation positive(Literal l) { return {Kind::Positive, std::move(l)}; }
    static Observation negative(Literal l) { return {Kind::Negative, std::move(l)}; }
    static Observation bot() { return {}; }
};

/// An (anti-)explanation (E, F): ground abducible instances to add and to
/// remove.
struct Explanation {
    Program add;
    Program remove;
    Mode mode = Mode::Credulous;
    bool minimal = false;

    std::size_t size() const { return add.size() + remove.size(); }
    /// Same (E, F), ignoring mode and tag.
    bool same_delta(const Explanation& other) const { return add == other.add && remove == other.remove; }

    friend bool operator==(const Explanation&, const Explanation&) = default;
};

/// By |E|+|F|, then E, then F.
bool delta_less(const Explanation& a, const Explanation& b);

/// Ground pipeline from a source abductive program to its update program,
/// keeping the maps needed to translate answers back.
struct Pipeline {
    Universe universe;
    AbductiveProgram source;       // ground, disjunctive-fact assumption established
    AbductiveProgram named;        // normal form: fact-only abducibles
    AbductiveProgram normal;       // named, head-abducible assumption established
    std::map<Rule, Rule> origin;   // primed abducible -> abducible of `named`
    UpdateProgram update;

    /// Source abducible for an abducible literal of the normal form.
    Rule to_source(const Literal& abducible) const;
};

Pipeline prepare(const AbductiveProgram& ap, const Universe& extra, const Options& options = {});

/// Explanations of a positive observation. With `minimal`, only minimal ones;
/// otherwise all of them, tagged. Sorted by delta_less.
std::vector<Explanation> explanations(const AbductiveProgram& ap, const Observation& g, Mode mode,
                                      bool minimal, const Options& options = {});

/// Anti-explanations of a negative observation or of Bot.
std::vector<Explanation> anti_explanations(const AbductiveProgram& ap, const Observation& g, Mode mode,
                                           bool minimal, const Options& options = {});

/// Dispatches on the observation kind.
std::vector<Explanation> solve(const AbductiveProgram& ap, const Observation& g, Mode mode, bool minimal,
                               const Options& options = {});

/// Adds g <- p1, ..., pm, not q1, ..., not qn for a fresh atom g.
std::pair<AbductiveProgram, Observation> compile_observations(const AbductiveProgram& ap,
                                                              const std::vector<Literal>& positives,
                                                              const std::vector<Literal>& negatives);

/// P' = (P \ A) u { A <- not A' | A in A n P } with abducibles (A \ P) u { A' }.
/// The map sends each A' to its A. Requires fact-only abducibles.
std::pair<AbductiveProgram, std::map<Literal, Literal>> to_normal_abduction(const AbductiveProgram& ap,
                                                                           const Limits& limits = {});

/// Explanations computed by translating to normal abduction and testing
/// every hypothesis set directly.
std::vector<Explanation> normal_abduction_explanations(const AbductiveProgram& ap, const Observation& g,
                                                       Mode mode, bool minimal, const Options& options = {});

/// Enumerates every (E, F) over the ground source program and checks the
/// definitions with the solver. Throws OracleBudgetExceeded beyond
/// `options.oracle_cap` ground hypotheses.
std::vector<Explanation> brute_force_explanations(const AbductiveProgram& ap, const Observation& g, Mode mode,
                                                  bool minimal, const Options& options = {});

/// Fresh reserved literal `__<role>_p_<pred>` (or `_n_` for a negative
/// literal) with the arguments of `l`.
Literal reserved_literal(const std::string& role, const Literal& l);

/// Predicate names used anywhere in `p`.
std::set<std::string> predicates(const Program& p);

/// `base`, or `base` followed by the first integer that makes it unused.
std::string fresh_predicate(const std::string& base, const std::set<std::string>& used);

/// (P \ F) u E on ground instantiations, keeping non-ground rules untouched
/// when none of their instances is removed and the universe is unchanged.
Program apply_delta(const Program& p, const Program& add, const Program& remove, const Universe& universe,
                    const Limits& limits = {});

std::string to_string(const Explanation& e);

} // namespace abdukit

#endif
