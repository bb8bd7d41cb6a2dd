// Copyright (C) 2026 The abdukit authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "abdukit/abduction.hpp"
#include "abdukit/parser.hpp"
#include "oracle.hpp"
#include "random_instances.hpp"

using namespace abdukit;
using abdukit::testkit::DefinitionExplanation;

namespace {

AbductiveProgram load(const std::string& name)
{
    std::ifstream in(std::string(ABDUKIT_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto u = parse(ss.str());
    return {u.program, u.abducibles};
}

AbductiveProgram ap_of(std::string_view text)
{
    const auto u = parse(text);
    return {u.program, u.abducibles};
}

Program rules(std::initializer_list<const char*> texts)
{
    Program p;
    for (const char* t : texts)
        p.insert(parse_rule(t));
    return p;
}

DefinitionExplanation delta(std::initializer_list<const char*> add, std::initializer_list<const char*> remove)
{
    return {rules(add), rules(remove)};
}

std::vector<DefinitionExplanation> sorted(std::vector<DefinitionExplanation> xs)
{
    std::sort(xs.begin(), xs.end());
    return xs;
}

Observation pos(const char* l) { return Observation::positive(parse_literal(l)); }
Observation neg(const char* l) { return Observation::negative(parse_literal(l)); }

Options roomy()
{
    Options o;
    o.limits.max_universe = 30;
    return o;
}

} // namespace

// ---------------------------------------------------------------------------
// Assumptions and transformations
// ---------------------------------------------------------------------------

TEST(Abduction, AbducibleLiterals)
{
    const auto a = abducible_literals(rules({"a.", "-b.", "p :- q."}));
    EXPECT_EQ(a, (std::set<Literal>{parse_literal("a"), parse_literal("-b")}));
}

TEST(Abduction, DisjunctiveFactAssumption)
{
    const auto ap = ap_of("a ; b. p :- a. #abducible a. #abducible b.");
    EXPECT_FALSE(satisfies_disjunctive_fact_assumption(ap));
    const auto fixed = establish_disjunctive_fact_assumption(ap);
    EXPECT_TRUE(fixed.abducibles.contains(parse_rule("a ; b.")));
    EXPECT_TRUE(satisfies_disjunctive_fact_assumption(fixed));
    EXPECT_EQ(fixed.program, ap.program);
}

TEST(Abduction, HeadAbducibleNormalization)
{
    const auto ap = ap_of("a :- b. a. c. #abducible a. #abducible b.");
    EXPECT_FALSE(satisfies_head_abducible_assumption(ap));
    std::map<Rule, Rule> origin;
    const auto n = normalize_abducible_heads(ap, &origin);
    EXPECT_TRUE(satisfies_head_abducible_assumption(n));

    ASSERT_EQ(origin.size(), 1U);
    const Rule renamed = origin.begin()->first;
    EXPECT_EQ(origin.begin()->second, parse_rule("a."));
    ASSERT_TRUE(renamed.is_fact());
    const Literal prime = renamed.head()[0];
    EXPECT_TRUE(prime.is_reserved());
    EXPECT_TRUE(n.program.contains(Rule({parse_literal("a")}, {BodyLiteral{prime, false}})));
    EXPECT_TRUE(n.program.contains(renamed));
    EXPECT_FALSE(n.program.contains(parse_rule("a.")));
    EXPECT_TRUE(n.abducibles.contains(renamed));
    EXPECT_TRUE(n.abducibles.contains(parse_rule("b.")));
}

TEST(Abduction, NormalFormNamesRules)
{
    const auto ap = load("penguin.edp");
    const auto [n, names] = normal_form(ap);
    ASSERT_EQ(names.names().size(), 2U);
    const Literal g_flies = *names.name_of(parse_rule("flies(X) :- bird(X)."));
    const Literal g_neg = *names.name_of(parse_rule("-flies(X) :- penguin(X)."));
    EXPECT_NE(g_flies.atom.predicate, g_neg.atom.predicate);

    Program expected = rules({"bird(X) :- penguin(X).", "bird(polly).", "penguin(tweety)."});
    expected.insert(parse_rule("flies(X) :- bird(X).").with_body_element(BodyLiteral{g_flies, false}));
    expected.insert(parse_rule("-flies(X) :- penguin(X).").with_body_element(BodyLiteral{g_neg, false}));
    expected.insert(Rule::fact(g_flies));
    EXPECT_EQ(n.program, expected);
    EXPECT_EQ(n.abducibles, (Program{Rule::fact(g_flies), Rule::fact(g_neg)}));

    Literal ground_name = g_neg;
    ground_name.atom.args = {Term::constant("tweety")};
    EXPECT_EQ(names.source_of(ground_name), parse_rule("-flies(tweety) :- penguin(tweety)."));
    EXPECT_EQ(names.source_of(parse_literal("a")), parse_rule("a."));
}

TEST(Abduction, UpdateProgramOfSmallExample)
{
    const auto up = build_update_program(load("trans_ex.edp"));
    EXPECT_EQ(up.ua_plus.size(), 1U);
    EXPECT_EQ(up.ua_minus.size(), 1U);
    EXPECT_EQ(up.shadows.size(), 2U);
    const auto result = answer_sets(up.rules);
    EXPECT_EQ(result.sets.size(), 4U);
    const auto minimal = u_minimal_filter(result, up.update_atoms());
    ASSERT_EQ(minimal.sets.size(), 1U);
    EXPECT_EQ(minimal.sets[0].without_reserved().literals(),
              (std::set<Literal>{parse_literal("a"), parse_literal("q")}));
}

TEST(Abduction, DisjunctiveEncodingHasSameAnswerSets)
{
    const auto ap = load("trans_ex.edp");
    const auto a = build_update_program(ap, Encoding::NafPair);
    const auto b = build_update_program(ap, Encoding::DisjunctiveFact);
    EXPECT_NE(a.rules, b.rules);
    EXPECT_EQ(answer_sets(a.rules), answer_sets(b.rules));
}

TEST(Abduction, ReservedLiteralsAndFreshNames)
{
    EXPECT_EQ(to_string(reserved_literal("bar", parse_literal("-p(a)"))), "__bar_n_p(a)");
    EXPECT_EQ(fresh_predicate("__del", {"p"}), "__del");
    EXPECT_EQ(fresh_predicate("__del", {"__del", "__del1"}), "__del2");
}

TEST(Abduction, ApplyDelta)
{
    const Program p = parse("p(X) :- q(X). q(a). q(b).").program;
    const Universe u = constants(p);
    const Program out = apply_delta(p, rules({"r."}), rules({"p(a) :- q(a)."}), u);
    EXPECT_TRUE(out.contains(parse_rule("p(b) :- q(b).")));
    EXPECT_FALSE(out.contains(parse_rule("p(a) :- q(a).")));
    EXPECT_TRUE(out.contains(parse_rule("r.")));
    EXPECT_EQ(apply_delta(p, {}, {}, u), p);
}

// ---------------------------------------------------------------------------
// Worked examples
// ---------------------------------------------------------------------------

TEST(Abduction, ExplainAndAntiExplain)
{
    const auto ap = load("trans_ex.edp");
    EXPECT_EQ(testkit::as_definition(explanations(ap, pos("p"), Mode::Credulous, true)),
              std::vector{delta({"b."}, {})});
    EXPECT_EQ(testkit::as_definition(explanations(ap, pos("p"), Mode::Skeptical, true)),
              std::vector{delta({"b."}, {})});
    EXPECT_EQ(testkit::as_definition(anti_explanations(ap, neg("q"), Mode::Credulous, true)),
              sorted({delta({"b."}, {}), delta({}, {"a."})}));
}

TEST(Abduction, CombinedObservations)
{
    const auto [ap, g] = compile_observations(load("trans_ex.edp"), {parse_literal("p")}, {parse_literal("q")});
    EXPECT_EQ(g.kind, Observation::Kind::Positive);
    EXPECT_TRUE(g.literal.is_reserved());
    EXPECT_EQ(testkit::as_definition(explanations(ap, g, Mode::Credulous, true)), std::vector{delta({"b."}, {})});
}

TEST(Abduction, CredulousVersusSkeptical)
{
    const auto ap = load("disjunctive.edp");
    const auto cred = explanations(ap, pos("p"), Mode::Credulous, false);
    EXPECT_EQ(testkit::as_definition(cred), sorted({delta({"a."}, {}), delta({"a."}, {"b."})}));
    EXPECT_EQ(testkit::as_definition(explanations(ap, pos("p"), Mode::Skeptical, false)),
              std::vector{delta({"a."}, {"b."})});
    // Not minimal: ({a}, {}) is smaller.
    for (const auto& e : cred)
        EXPECT_EQ(e.minimal, e.remove.empty());
}

TEST(Abduction, VariablesGroundedOverTheUniverse)
{
    const auto ap = load("variables.edp");
    EXPECT_EQ(testkit::as_definition(explanations(ap, pos("g"), Mode::Skeptical, true)),
              sorted({delta({"p(a)."}, {"q(a)."}), delta({"p(b)."}, {"q(a)."})}));
}

TEST(Abduction, AbducibleRules)
{
    const auto ap = load("penguin.edp");
    EXPECT_EQ(testkit::as_definition(explanations(ap, pos("-flies(tweety)"), Mode::Skeptical, true)),
              std::vector{delta({"-flies(tweety) :- penguin(tweety)."}, {"flies(tweety) :- bird(tweety)."})});
}

TEST(Abduction, AntiExplanationRemovesDisjunctiveFact)
{
    const auto ap = ap_of("p :- a. p :- b. a ; b. #abducible a. #abducible b.");
    EXPECT_EQ(testkit::as_definition(anti_explanations(ap, neg("p"), Mode::Credulous, true)),
              std::vector{delta({}, {"a ; b."})});
}

TEST(Abduction, BotAntiExplanation)
{
    const Program p = parse("p :- not p. q.").program;
    const AbductiveProgram ap{p, p};
    EXPECT_EQ(testkit::as_definition(anti_explanations(ap, Observation::bot(), Mode::Credulous, true)),
              std::vector{delta({}, {"p :- not p."})});
    try {
        anti_explanations(ap, Observation::bot(), Mode::Skeptical, true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SkepticalBotUnsupported);
    }
}

TEST(Abduction, ObservationOnAbducibleIsRejected)
{
    try {
        explanations(load("trans_ex.edp"), pos("a"), Mode::Credulous, true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AbducibleObservation);
    }
}

TEST(Abduction, SkepticalAntiExplanation)
{
    // p holds in one of two answer sets; removing `a` kills it in both.
    const auto ap = ap_of("p :- a, not q. q :- not p. a. #abducible a.");
    EXPECT_EQ(testkit::as_definition(anti_explanations(ap, neg("p"), Mode::Credulous, true)),
              std::vector{delta({}, {})});
    EXPECT_EQ(testkit::as_definition(anti_explanations(ap, neg("p"), Mode::Skeptical, true)),
              std::vector{delta({}, {"a."})});
}

TEST(Abduction, NormalAbductionRoute)
{
    const auto ap = load("trans_ex.edp");
    const auto [na, back] = to_normal_abduction(ap);
    EXPECT_EQ(back.size(), 1U);
    EXPECT_FALSE(na.program.contains(parse_rule("a.")));
    EXPECT_EQ(normal_abduction_explanations(ap, pos("p"), Mode::Skeptical, true),
              explanations(ap, pos("p"), Mode::Skeptical, true));
    const auto ground_vars = load("variables.edp");
    EXPECT_EQ(testkit::as_definition(normal_abduction_explanations(ground_vars, pos("g"), Mode::Skeptical, true)),
              testkit::as_definition(explanations(ground_vars, pos("g"), Mode::Skeptical, true)));
}

TEST(Abduction, BruteForceBudget)
{
    std::string text = "g :- x0.\n";
    for (int i = 0; i < 14; ++i)
        text += "#abducible x" + std::to_string(i) + ".\n";
    try {
        brute_force_explanations(ap_of(text), pos("g"), Mode::Credulous, true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OracleBudgetExceeded);
    }
}

TEST(Abduction, ToStringOfExplanation)
{
    Explanation e;
    e.add = rules({"b."});
    e.remove = rules({"a."});
    EXPECT_EQ(to_string(e), "({b.}, {a.})");
}

// ---------------------------------------------------------------------------
// Properties on random instances
// ---------------------------------------------------------------------------

TEST(AbductionProperty, AgreesWithDefinitions)
{
    testkit::Generator gen(101);
    const Options options = roomy();
    int checked = 0;
    for (int i = 0; i < 250; ++i) {
        const auto inst = gen.abductive();
        for (auto mode : {Mode::Credulous, Mode::Skeptical}) {
            if (inst.obs.kind == Observation::Kind::Bot && mode == Mode::Skeptical)
                continue;
            for (bool minimal : {false, true}) {
                const auto expected = testkit::definition_explanations(inst.ap, inst.obs, mode, minimal);
                const auto got = testkit::as_definition(solve(inst.ap, inst.obs, mode, minimal, options));
                EXPECT_EQ(got, expected) << inst.describe() << (mode == Mode::Skeptical ? "skeptical" : "credulous")
                                         << (minimal ? " minimal" : "");
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 600);
}

TEST(AbductionProperty, SkepticalImpliesCredulous)
{
    testkit::Generator gen(202);
    const Options options = roomy();
    for (int i = 0; i < 250; ++i) {
        const auto inst = gen.abductive();
        if (inst.obs.kind == Observation::Kind::Bot)
            continue;
        const auto cred = testkit::as_definition(solve(inst.ap, inst.obs, Mode::Credulous, false, options));
        for (const auto& x : testkit::as_definition(solve(inst.ap, inst.obs, Mode::Skeptical, false, options)))
            EXPECT_TRUE(std::binary_search(cred.begin(), cred.end(), x)) << inst.describe();
    }
}

TEST(AbductionProperty, MinimalIsTheMinimalTagOfAll)
{
    testkit::Generator gen(303);
    const Options options = roomy();
    for (int i = 0; i < 250; ++i) {
        const auto inst = gen.abductive();
        const auto mode = inst.obs.kind == Observation::Kind::Bot ? Mode::Credulous : Mode::Skeptical;
        const auto all = solve(inst.ap, inst.obs, mode, false, options);
        std::vector<Explanation> tagged;
        for (const auto& e : all) {
            EXPECT_EQ(e.mode, mode);
            if (e.minimal)
                tagged.push_back(e);
        }
        EXPECT_EQ(testkit::as_definition(tagged),
                  testkit::as_definition(solve(inst.ap, inst.obs, mode, true, options)))
            << inst.describe();
    }
}

TEST(AbductionProperty, ResultsAreSortedAndDisjoint)
{
    testkit::Generator gen(404);
    const Options options = roomy();
    for (int i = 0; i < 200; ++i) {
        const auto inst = gen.abductive();
        const auto xs = solve(inst.ap, inst.obs, Mode::Credulous, false, options);
        EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end(), delta_less));
        for (const auto& e : xs)
            for (const auto& r : e.add)
                EXPECT_FALSE(e.remove.contains(r));
    }
}

// ---------------------------------------------------------------------------
// Further worked cases
// ---------------------------------------------------------------------------

TEST(Abduction, NormalizationCases)
{
    const auto one = normalize_abducible_heads(ap_of("a :- b. #abducible a."));
    ASSERT_EQ(one.abducibles.size(), 1U);
    const Literal prime = one.abducibles.begin()->head()[0];
    EXPECT_TRUE(prime.is_reserved());
    EXPECT_EQ(one.program, (Program{parse_rule("a :- b."), Rule({parse_literal("a")}, {BodyLiteral{prime, false}})}));

    const auto fine = ap_of("p :- a. a. #abducible a.");
    EXPECT_EQ(normalize_abducible_heads(fine), fine);

    // A fact made of abducibles gets the primed literal.
    const auto disj = normalize_abducible_heads(ap_of("a ; b. a :- c. #abducible a. #abducible b."));
    EXPECT_TRUE(satisfies_head_abducible_assumption(disj));
    bool primed_fact = false;
    for (const auto& r : disj.program)
        if (r.is_disjunctive_fact() && r.head().size() == 2)
            primed_fact = std::any_of(r.head().begin(), r.head().end(), [](const Literal& l) { return l.is_reserved(); });
    EXPECT_TRUE(primed_fact);

    // A mixed fact keeps its head; only the abducible moves to a'.
    const auto mixed = normalize_abducible_heads(ap_of("a ; c. #abducible a. #abducible b."));
    EXPECT_TRUE(satisfies_head_abducible_assumption(mixed));
    EXPECT_TRUE(mixed.program.contains(parse_rule("a ; c.")));
    EXPECT_EQ(mixed.abducibles.size(), 2U);
    EXPECT_FALSE(mixed.abducibles.contains(parse_rule("a.")));
}

TEST(Abduction, NormalFormOfDisjunctiveAbducible)
{
    const auto ap = ap_of("p :- a. p :- b. a ; b. #abducible a. #abducible b. #abducible a ; b.");
    const auto [n, names] = normal_form(ap);
    const Literal gamma = *names.name_of(parse_rule("a ; b."));
    EXPECT_TRUE(n.program.contains(parse_rule("a ; b.").with_body_element(BodyLiteral{gamma, false})));
    EXPECT_TRUE(n.program.contains(Rule::fact(gamma)));
    EXPECT_EQ(n.abducibles, (Program{parse_rule("a."), parse_rule("b."), Rule::fact(gamma)}));

    const auto facts = load("trans_ex.edp");
    const auto [same, none] = normal_form(facts);
    EXPECT_EQ(same, facts);
    EXPECT_TRUE(none.empty());
}

TEST(Abduction, UpdateProgramShapes)
{
    const auto up = build_update_program(load("trans_ex.edp"));
    const Literal a = parse_literal("a");
    const Literal b = parse_literal("b");
    EXPECT_TRUE(up.rules.contains(Rule({reserved_literal("minus", a)}, {BodyLiteral{a, true}})));
    EXPECT_TRUE(up.rules.contains(Rule({reserved_literal("plus", b)}, {BodyLiteral{b, false}})));
    EXPECT_FALSE(up.rules.contains(parse_rule("a.")));

    const Program p = parse("p :- q. q.").program;
    const auto plain = build_update_program({p, {}});
    EXPECT_EQ(plain.rules, p);
    EXPECT_TRUE(plain.update_atoms().empty());

    const auto birds = parse(R"(flies(X) :- bird(X), not ab(X).
        ab(X) :- broken_wing(X). bird(tweety). bird(opus). broken_wing(tweety).)");
    const auto bup = build_update_program({birds.program, parse("broken_wing(X).").program});
    const Literal bt = parse_literal("broken_wing(tweety)");
    const Literal bo = parse_literal("broken_wing(opus)");
    EXPECT_TRUE(bup.rules.contains(Rule({reserved_literal("minus", bt)}, {BodyLiteral{bt, true}})));
    EXPECT_TRUE(bup.rules.contains(Rule({reserved_literal("plus", bo)}, {BodyLiteral{bo, false}})));
}

TEST(Abduction, UMinimalFilterEdgeCases)
{
    EXPECT_TRUE(u_minimal_filter({}, {}).sets.empty());
    const auto r = make_result({Interpretation({parse_literal("x")}), Interpretation({parse_literal("y")})});
    EXPECT_EQ(u_minimal_filter(r, {parse_literal("u")}), r);
}

TEST(Abduction, ObservationCompilationReduces)
{
    const auto ap = load("trans_ex.edp");
    const auto [only_pos, g1] = compile_observations(ap, {parse_literal("p")}, {});
    EXPECT_EQ(testkit::as_definition(explanations(only_pos, g1, Mode::Skeptical, true)),
              testkit::as_definition(explanations(ap, pos("p"), Mode::Skeptical, true)));
    const auto [only_neg, g2] = compile_observations(ap, {}, {parse_literal("q")});
    EXPECT_EQ(testkit::as_definition(explanations(only_neg, g2, Mode::Credulous, true)),
              testkit::as_definition(anti_explanations(ap, neg("q"), Mode::Credulous, true)));
}

TEST(Abduction, NormalAbductionShapes)
{
    const auto [na, back] = to_normal_abduction(load("trans_ex.edp"));
    ASSERT_EQ(back.size(), 1U);
    const Literal alt = back.begin()->first;
    EXPECT_EQ(back.begin()->second, parse_literal("a"));
    EXPECT_EQ(na.program, (Program{parse_rule("p :- b."), parse_rule("q :- a, not b."),
                                   Rule({parse_literal("a")}, {BodyLiteral{alt, true}})}));
    EXPECT_EQ(na.abducibles, (Program{parse_rule("b."), Rule::fact(alt)}));

    const auto fresh = ap_of("p :- b. #abducible b.");
    const auto [same, nothing] = to_normal_abduction(fresh);
    EXPECT_EQ(same, fresh);
    EXPECT_TRUE(nothing.empty());
}

TEST(Abduction, BruteForceCases)
{
    const auto entailed = ap_of("p.");
    EXPECT_EQ(testkit::as_definition(brute_force_explanations(entailed, pos("p"), Mode::Skeptical, true)),
              std::vector{DefinitionExplanation{}});
    const auto ap = load("trans_ex.edp");
    EXPECT_EQ(brute_force_explanations(ap, pos("p"), Mode::Skeptical, true),
              explanations(ap, pos("p"), Mode::Skeptical, true));
    EXPECT_EQ(testkit::as_definition(brute_force_explanations(load("disjunctive.edp"), pos("p"), Mode::Credulous, false)),
              sorted({delta({"a."}, {}), delta({"a."}, {"b."})}));
}

TEST(Abduction, TraceNamesStayReserved)
{
    const auto pl = prepare(load("penguin.edp"), {}, {});
    for (const auto& a : abducible_literals(pl.normal.abducibles))
        EXPECT_TRUE(a.is_reserved());
    for (const auto& [u, a] : pl.update.abducible_of)
        EXPECT_TRUE(u.is_reserved());
}
