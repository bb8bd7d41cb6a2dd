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

#ifndef ABDUKIT_SOLVER_HPP
#define ABDUKIT_SOLVER_HPP

#include <set>
#include <string>
#include <vector>

#include "abdukit/core.hpp"

namespace abdukit {

/// A set of ground literals, or the contradictory marker standing for the
/// whole literal universe.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::set<Literal> literals);

    static Interpretation contradictory();

    bool is_contradictory() const noexcept { return contradictory_; }
    bool contains(const Literal& l) const;
    const std::set<Literal>& literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }

    /// Drops atoms in the reserved namespace.
    Interpretation without_reserved() const;
    std::string to_string() const;

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    /// Contradictory last, then by size, then lexicographically.
    friend std::strong_ordering operator<=>(const Interpretation& a, const Interpretation& b);

private:
    bool contradictory_ = false;
    std::set<Literal> literals_;
};

struct AnswerSetResult {
    std::vector<Interpretation> sets;   // sorted, duplicate-free
    bool contains_contradictory = false;

    bool consistent() const;
    friend bool operator==(const AnswerSetResult&, const AnswerSetResult&) = default;
};

/// Builds a result with sorted, duplicate-free sets.
AnswerSetResult make_result(std::vector<Interpretation> sets);

/// Throws NonGroundRule for rules with variables or comparisons.
bool satisfies(const Interpretation& s, const Rule& r);

/// Gelfond-Lifschitz reduct of a ground program.
Program reduct(const Program& p, const Interpretation& s);

/// All answer sets of a ground program. Throws CandidateBudgetExceeded when
/// the number of guessed literals exceeds `limits.max_universe`.
AnswerSetResult answer_sets(const Program& p, const Limits& limits = {});

/// Exhaustive reference enumeration over every candidate subset of the head
/// literals plus the contradictory candidate. Exponential; test use only.
AnswerSetResult answer_sets_reference(const Program& p, std::size_t max_literals = 16);

/// Grounds `p` over its own constants (plus `extra`) and checks for a
/// consistent answer set.
bool consistent(const Program& p, const Limits& limits = {}, const Universe& extra = {});

/// `l` is in every answer set (vacuously true without answer sets).
bool entails(const Program& p, const Literal& l, const Limits& limits = {},
             const Universe& extra = {});

/// `l` is in some consistent answer set.
bool credulous_holds(const Program& p, const Literal& l, const Limits& limits = {},
                     const Universe& extra = {});

/// No cycle through a negative edge in the literal dependency graph. With
/// `require_nlp`, throws NotNLP on disjunctive heads or strong negation.
bool is_stratified(const Program& p, bool require_nlp);

} // namespace abdukit

#endif
