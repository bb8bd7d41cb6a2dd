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

#ifndef ABDUKIT_UPDATES_HPP
#define ABDUKIT_UPDATES_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "abdukit/abduction.hpp"

namespace abdukit {

enum class UpdateKind { ViewInsert, ViewDelete, Integrity, Theory, RuleInsert, RuleDelete, InconsistencyRemoval };

std::string_view to_string(UpdateKind kind);

/// One way of carrying out an update. `updated_program` equals
/// (P \ delta.remove) u delta.add on ground instantiations.
struct UpdateSolution {
    Program updated_program;
    Explanation delta;
    UpdateKind kind = UpdateKind::ViewInsert;
};

/// No solutions means the update cannot be accomplished; `diagnostics` says
/// why when the cause is known.
struct UpdateResult {
    std::vector<UpdateSolution> solutions;
    std::vector<std::string> diagnostics;
};

/// Inserts a derived literal by changing only instances of the variable
/// rules `v`. One solution per minimal skeptical explanation.
UpdateResult view_insert(const Program& p, const Program& v, const Literal& g, const Options& options = {});

/// Deletes a derived literal. One solution per minimal credulous
/// anti-explanation.
UpdateResult view_delete(const Program& p, const Program& v, const Literal& g, const Options& options = {});

/// Restores consistency by changing the variable part. Throws
/// ConstraintInVariablePart when an integrity constraint of `p` is variable.
UpdateResult maintain_integrity(const Program& p, const Program& v, const Options& options = {});

/// Maximal consistent programs P' with Q <= P' <= P u Q. Reports a
/// diagnostic and no solutions when Q itself is inconsistent.
UpdateResult theory_update(const Program& p, const Program& q, const Options& options = {});

/// theory_update(p, {r}). Throws RuleAlreadyPresent.
UpdateResult insert_rule(const Program& p, const Rule& r, const Options& options = {});

/// Maximal consistent subsets of P \ {r}. Throws RuleNotPresent.
UpdateResult delete_rule(const Program& p, const Rule& r, const Options& options = {});

enum class RepairScope { AllRules, Subset, FactUniverse };

/// Minimal changes making `p` consistent. AllRules may remove any rule,
/// Subset only rules of `subset` (which must lie in `p`, else
/// ScopeNotSubset), FactUniverse may add or remove any ground literal over
/// the predicates and constants of `p`.
UpdateResult remove_inconsistency(const Program& p, RepairScope scope, const Program& subset = {},
                                  const Options& options = {});

/// Pi = Q u { S <- B, k_R and the choice between k_R and its shadow | R in P \ Q },
/// ground. Each k_R is a `__keep<n>` atom over the variables of R.
struct MultiSolutionProgram {
    Program pi;
    std::set<Literal> delta_atoms;
};

MultiSolutionProgram multi_solution_program(const Program& p, const Program& q, const Limits& limits = {});

/// Consistent answer sets of Pi whose projection on the keep atoms is not
/// strictly contained in another's.
AnswerSetResult delta_maximal_answer_sets(const MultiSolutionProgram& m, const Limits& limits = {});

} // namespace abdukit

#endif
