// Copyright (C) 2026 The abdukit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABDUKIT_TESTS_RANDOM_INSTANCES_HPP
#define ABDUKIT_TESTS_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abdukit/abduction.hpp"
#include "abdukit/parser.hpp"

namespace abdukit::testkit {

struct Instance {
    AbductiveProgram ap;
    Observation obs;

    std::string describe() const
    {
        SourceUnit u{ap.program, ap.abducibles, {}};
        std::string g = obs.kind == Observation::Kind::Bot ? "bot"
                        : obs.kind == Observation::Kind::Positive ? "+" + to_string(obs.literal)
                                                                   : "-" + to_string(obs.literal);
        return render(u) + "% observation " + g + "\n";
    }
};

/// Small propositional abductive programs: at most 6 atoms, 8 rules and 4
/// ground abducibles, with disjunctive heads, strong negation, constraints
/// and occasional abducible rules.
class Generator {
public:
    explicit Generator(std::uint32_t seed) : rng_(seed) {}

    Program program(int atoms, int rules)
    {
        Program p;
        for (int i = 0; i < rules; ++i)
            p.insert(random_rule(atoms));
        return p;
    }

    Instance abductive()
    {
        const int atoms = uniform(2, 6);
        Instance inst;
        inst.ap.program = program(atoms, uniform(1, 8));

        std::set<Literal> abducible_lits;
        const int hyps = uniform(0, 4);
        for (int i = 0; i < hyps; ++i) {
            if (chance(0.2)) {
                Rule r = chance(0.5) ? random_rule(atoms) : Rule({literal(atoms), literal(atoms)}, {});
                if (r.head().empty() || r.is_fact())
                    r = Rule({literal(atoms)}, {BodyLiteral{literal(atoms), chance(0.3)}});
                inst.ap.abducibles.insert(r);
                if (chance(0.5))
                    inst.ap.program.insert(r);
            } else {
                const Literal l = literal(atoms);
                abducible_lits.insert(l);
                inst.ap.abducibles.insert(Rule::fact(l));
                if (chance(0.5))
                    inst.ap.program.insert(Rule::fact(l));
            }
        }

        const int kind = uniform(0, 9);
        if (kind < 2) {
            inst.obs = Observation::bot();
            return inst;
        }
        Literal g = literal(atoms);
        for (int tries = 0; abducible_lits.count(g) && tries < 20; ++tries)
            g = literal(atoms);
        if (abducible_lits.count(g)) {
            inst.obs = Observation::bot();
            return inst;
        }
        inst.obs = kind < 6 ? Observation::positive(g) : Observation::negative(g);
        return inst;
    }

    /// Ground normal programs whose bodies only mention lower-numbered atoms
    /// under `not`, so every instance is stratified. Abducibles are facts.
    Instance stratified()
    {
        const int atoms = uniform(2, 6);
        Instance inst;
        const int rules = uniform(1, 8);
        for (int i = 0; i < rules; ++i) {
            const int h = uniform(0, atoms - 1);
            std::vector<BodyElement> body;
            const int n = uniform(0, 2);
            for (int k = 0; k < n && h > 0; ++k) {
                const int b = uniform(0, h - 1);
                body.push_back(BodyLiteral{atom(b), chance(0.4)});
            }
            if (chance(0.1))
                inst.ap.program.insert(Rule({}, body.empty() ? std::vector<BodyElement>{BodyLiteral{atom(h), false}}
                                                             : body));
            else
                inst.ap.program.insert(Rule({atom(h)}, std::move(body)));
        }
        std::set<Literal> abducible_lits;
        const int hyps = uniform(1, 4);
        for (int i = 0; i < hyps; ++i) {
            const Literal l = atom(uniform(0, atoms - 1));
            abducible_lits.insert(l);
            inst.ap.abducibles.insert(Rule::fact(l));
            if (chance(0.4))
                inst.ap.program.insert(Rule::fact(l));
        }
        Literal g = atom(uniform(0, atoms - 1));
        for (int tries = 0; abducible_lits.count(g) && tries < 20; ++tries)
            g = atom(uniform(0, atoms - 1));
        if (abducible_lits.count(g))
            g = Literal(Atom("goal"), false);
        inst.obs = chance(0.5) ? Observation::positive(g) : Observation::negative(g);
        return inst;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

private:
    static Literal atom(int i) { return Literal(Atom(std::string(1, static_cast<char>('a' + i))), false); }

    Literal literal(int atoms) { return Literal(atom(uniform(0, atoms - 1)).atom, chance(0.25)); }

    Rule random_rule(int atoms)
    {
        std::vector<Literal> head;
        const int shape = uniform(0, 9);
        if (shape >= 1)
            head.push_back(literal(atoms));
        if (shape >= 8)
            head.push_back(literal(atoms));
        std::vector<BodyElement> body;
        const int n = head.empty() ? uniform(1, 2) : uniform(0, 2);
        for (int k = 0; k < n; ++k)
            body.push_back(BodyLiteral{literal(atoms), chance(0.4)});
        return Rule(std::move(head), std::move(body));
    }

    std::mt19937 rng_;
};

} // namespace abdukit::testkit

#endif
